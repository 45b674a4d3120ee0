//! `--spec <file>`: a flat `key=value` file whose keys mirror long flag
//! names. File entries are spliced in ahead of the command-line flags, so
//! a flag given explicitly overrides the file.

use std::ffi::OsString;
use std::fs;
use std::io;
use std::path::PathBuf;

/// Translate the contents of a spec file into flag tokens.
///
/// Blank lines and lines starting with `#` are ignored. `key=true` becomes
/// a bare `--key`; `key=false` is dropped.
pub fn spec_to_args(text: &str) -> Result<Vec<OsString>, String> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("spec line {}: expected key=value, got {line:?}", n + 1));
        };
        let key = key.trim().trim_start_matches("--");
        let value = value.trim();
        if key.is_empty() || key == "spec" {
            return Err(format!("spec line {}: invalid key {key:?}", n + 1));
        }
        match value {
            "true" => out.push(format!("--{key}").into()),
            "false" => {}
            _ => out.push(format!("--{key}={value}").into()),
        }
    }
    Ok(out)
}

#[derive(Debug)]
pub enum ExpandError {
    Usage(String),
    Io(PathBuf, io::Error),
}

/// Remove every `--spec` option from `args` and splice the file contents
/// in right after the subcommand name.
pub fn expand_spec_args(args: Vec<OsString>) -> Result<Vec<OsString>, ExpandError> {
    let mut rest = Vec::with_capacity(args.len());
    let mut files = Vec::new();
    let mut it = args.into_iter();
    if let Some(bin) = it.next() {
        rest.push(bin);
    }
    while let Some(arg) = it.next() {
        let s = arg.to_string_lossy();
        if s == "--spec" {
            let path = it.next().ok_or_else(|| ExpandError::Usage("--spec needs a file".into()))?;
            files.push(PathBuf::from(path));
        } else if let Some(p) = s.strip_prefix("--spec=") {
            files.push(PathBuf::from(p));
        } else {
            rest.push(arg);
        }
    }
    if files.is_empty() {
        return Ok(rest);
    }
    let mut injected = Vec::new();
    for f in files {
        let text = fs::read_to_string(&f).map_err(|e| ExpandError::Io(f.clone(), e))?;
        injected.extend(spec_to_args(&text).map_err(ExpandError::Usage)?);
    }
    // the subcommand is the first token after the binary that is not a flag
    let at = rest
        .iter()
        .skip(1)
        .position(|a| !a.to_string_lossy().starts_with('-'))
        .map(|i| i + 2)
        .ok_or_else(|| ExpandError::Usage("--spec needs a subcommand".into()))?;
    rest.splice(at..at, injected);
    Ok(rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn os(v: &[&str]) -> Vec<OsString> {
        v.iter().map(OsString::from).collect()
    }

    #[test]
    fn parses_pairs_and_flags() {
        let args = spec_to_args("# sweep\npotential = rect\nv0=1\n\nnumeric=true\nlog=false\n").unwrap();
        assert_eq!(args, os(&["--potential=rect", "--v0=1", "--numeric"]));
    }

    #[test]
    fn rejects_garbage() {
        assert!(spec_to_args("no equals sign").is_err());
        assert!(spec_to_args("spec=other.txt").is_err());
    }

    #[test]
    fn splices_after_subcommand() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.txt");
        std::fs::write(&path, "v0=2\n").unwrap();
        let argv = os(&["qscatter", "eval", "--spec", path.to_str().unwrap(), "--v0", "3"]);
        let out = expand_spec_args(argv).unwrap();
        assert_eq!(out, os(&["qscatter", "eval", "--v0=2", "--v0", "3"]));
    }

    #[test]
    fn missing_file_is_io_error() {
        let argv = os(&["qscatter", "eval", "--spec", "/nonexistent/spec.txt"]);
        assert!(matches!(expand_spec_args(argv), Err(ExpandError::Io(..))));
    }
}
