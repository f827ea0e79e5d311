use std::collections::BTreeMap;

use serde::Serialize;

/// Per-run accounting, written to standard error as one JSON object so
/// standard output stays machine-diffable.
#[derive(Debug, Serialize)]
pub struct RunStats {
    pub n: usize,
    pub m_pos: usize,
    pub m_neg: usize,
    pub vr_removed: usize,
    pub dr_candidate_total: usize,
    pub results: usize,
    pub phase_times: BTreeMap<&'static str, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub peak_memory: Option<u64>,
}

/// High-water-mark RSS in bytes, where the platform exposes it.
pub fn peak_rss_bytes() -> Option<u64> {
    rusage_peak().or_else(proc_peak)
}

#[cfg(unix)]
fn rusage_peak() -> Option<u64> {
    let mut usage = std::mem::MaybeUninit::<libc::rusage>::zeroed();
    let rc = unsafe { libc::getrusage(libc::RUSAGE_SELF, usage.as_mut_ptr()) };
    if rc != 0 {
        return None;
    }
    let maxrss = unsafe { usage.assume_init() }.ru_maxrss as u64;
    // ru_maxrss is kilobytes on Linux, bytes on macOS
    if cfg!(target_os = "macos") {
        Some(maxrss)
    } else {
        Some(maxrss * 1024)
    }
}

#[cfg(not(unix))]
fn rusage_peak() -> Option<u64> {
    None
}

fn proc_peak() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    for line in status.lines() {
        if let Some(rest) = line.strip_prefix("VmHWM:") {
            let kb: u64 = rest.trim().trim_end_matches("kB").trim().parse().ok()?;
            return Some(kb * 1024);
        }
    }
    None
}
