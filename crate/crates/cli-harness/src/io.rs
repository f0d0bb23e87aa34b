//! Deterministic file emission: atomic writes (temp file + rename), CSV with
//! a mandatory header row and '\n' endings, minimal JSON with a schema tag.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use peakon_core::grid::GridFunction;

/// Output directory: PEAKON_OUT overrides the flag value.
pub fn output_dir(flag_value: &str) -> PathBuf {
    match std::env::var("PEAKON_OUT") {
        Ok(v) if !v.is_empty() => PathBuf::from(v),
        _ => PathBuf::from(flag_value),
    }
}

pub fn atomic_write(path: &Path, content: &str) -> io::Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, content)?;
    fs::rename(&tmp, path)
}

/// Shortest round-trip float formatting in exponent form; deterministic.
pub fn fmt(x: f64) -> String {
    format!("{x:e}")
}

pub fn grid_function_csv(f: &GridFunction) -> String {
    let spec = f.spec();
    let mut out = String::from("xi,re,im\n");
    for i in 0..spec.n_points() {
        let v = f.values()[i];
        out.push_str(&format!("{},{},{}\n", fmt(spec.node(i)), fmt(v.re), fmt(v.im)));
    }
    out
}

pub fn json_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use peakon_core::grid::GridSpec;

    #[test]
    fn atomic_write_replaces_content() {
        let dir = std::env::temp_dir().join(format!("peakon-io-test-{}", std::process::id()));
        let path = dir.join("a.csv");
        atomic_write(&path, "one\n").unwrap();
        atomic_write(&path, "two\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "two\n");
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn csv_has_header_and_rows() {
        let g = GridSpec::new(1.0, 3).unwrap();
        let f = GridFunction::from_real_fn(g, |x| x);
        let csv = grid_function_csv(&f);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "xi,re,im");
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("-1e0,-1e0,"));
    }
}
