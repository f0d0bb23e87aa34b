//! Long-flag argument grammar: `subcommand --name value ...`, nothing else.

use std::collections::BTreeMap;

use peakon_core::grid::GridSpec;

#[derive(Debug, Clone)]
pub struct Parsed {
    pub subcommand: String,
    flags: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn parse(argv: &[String]) -> Result<Parsed, UsageError> {
    if argv.is_empty() {
        return Err(UsageError("missing subcommand".into()));
    }
    let subcommand = argv[0].clone();
    if subcommand.starts_with("--") {
        return Err(UsageError(format!("expected a subcommand, got flag {subcommand}")));
    }
    let mut flags = BTreeMap::new();
    let mut i = 1;
    while i < argv.len() {
        let key = &argv[i];
        let Some(name) = key.strip_prefix("--") else {
            return Err(UsageError(format!("expected --flag, got {key}")));
        };
        let Some(value) = argv.get(i + 1) else {
            return Err(UsageError(format!("flag --{name} needs a value")));
        };
        flags.insert(name.to_string(), value.clone());
        i += 2;
    }
    Ok(Parsed { subcommand, flags })
}

impl Parsed {
    /// Reject flags outside the subcommand's grammar.
    pub fn allow(&self, allowed: &[&str]) -> Result<(), UsageError> {
        for key in self.flags.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(UsageError(format!(
                    "unknown flag --{key} for `{}` (allowed: {})",
                    self.subcommand,
                    allowed.iter().map(|a| format!("--{a}")).collect::<Vec<_>>().join(" ")
                )));
            }
        }
        Ok(())
    }

    pub fn str_or<'a>(&'a self, name: &str, default: &'a str) -> &'a str {
        self.flags.get(name).map(String::as_str).unwrap_or(default)
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(String::as_str)
    }

    pub fn f64_or(&self, name: &str, default: f64) -> Result<f64, UsageError> {
        match self.flags.get(name) {
            None => Ok(default),
            Some(v) => v
                .parse::<f64>()
                .map_err(|_| UsageError(format!("--{name} expects a number, got {v}")))
                .and_then(|x| {
                    if x.is_finite() {
                        Ok(x)
                    } else {
                        Err(UsageError(format!("--{name} must be finite")))
                    }
                }),
        }
    }

    pub fn usize_or(&self, name: &str, default: usize) -> Result<usize, UsageError> {
        match self.flags.get(name) {
            None => Ok(default),
            Some(v) => v
                .parse::<usize>()
                .map_err(|_| UsageError(format!("--{name} expects a nonnegative integer, got {v}"))),
        }
    }

    pub fn u64_or(&self, name: &str, default: u64) -> Result<u64, UsageError> {
        match self.flags.get(name) {
            None => Ok(default),
            Some(v) => v
                .parse::<u64>()
                .map_err(|_| UsageError(format!("--{name} expects a 64-bit seed, got {v}"))),
        }
    }

    pub fn bool_or(&self, name: &str, default: bool) -> Result<bool, UsageError> {
        match self.flags.get(name) {
            None => Ok(default),
            Some(v) => match v.as_str() {
                "true" | "1" | "yes" => Ok(true),
                "false" | "0" | "no" => Ok(false),
                _ => Err(UsageError(format!("--{name} expects true/false, got {v}"))),
            },
        }
    }

    /// Grid from --half-width (default 20) and --points (default 4001).
    pub fn grid(&self) -> Result<GridSpec, UsageError> {
        let x = self.f64_or("half-width", 20.0)?;
        let n = self.usize_or("points", 4001)?;
        GridSpec::new(x, n).map_err(|e| UsageError(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(parts: &[&str]) -> Vec<String> {
        parts.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_flags_and_rejects_strays() {
        let p = parse(&argv(&["classify", "--lambda-re", "0.5", "--space", "l2"])).unwrap();
        assert_eq!(p.subcommand, "classify");
        assert_eq!(p.str_or("space", "x"), "l2");
        assert!(parse(&argv(&["classify", "positional"])).is_err());
        assert!(parse(&argv(&["classify", "--dangling"])).is_err());
        assert!(parse(&argv(&["--no-subcommand", "x"])).is_err());
    }

    #[test]
    fn allow_list_catches_unknown_flags() {
        let p = parse(&argv(&["hardy", "--bogus", "1"])).unwrap();
        assert!(p.allow(&["seed", "trials"]).is_err());
    }

    #[test]
    fn typed_getters_validate() {
        let p = parse(&argv(&["x", "--a", "nope", "--b", "3.5", "--n", "7"])).unwrap();
        assert!(p.f64_or("a", 0.0).is_err());
        assert_eq!(p.f64_or("b", 0.0).unwrap(), 3.5);
        assert_eq!(p.usize_or("n", 0).unwrap(), 7);
        assert_eq!(p.f64_or("absent", 2.0).unwrap(), 2.0);
    }
}
