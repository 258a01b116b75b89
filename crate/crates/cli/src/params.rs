//! Parameters shared by flags and `key=value` config files.
//!
//! Every configurable parameter is declared once; the flag, the config key,
//! the documented default and the reproducibility header all derive from
//! that declaration. Precedence is flag, then config file, then default.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use clap::{Arg, ArgMatches, Command};

use crate::error::CliError;

pub struct Param {
    pub key: &'static str,
    pub default: Option<&'static str>,
    pub help: &'static str,
}

pub const fn param(key: &'static str, default: Option<&'static str>, help: &'static str) -> Param {
    Param { key, default, help }
}

/// Adds one `--<key> <value>` option per parameter.
pub fn add_params(mut cmd: Command, params: &'static [Param]) -> Command {
    for p in params {
        let help = match p.default {
            Some(d) => format!("{} [default: {d}]", p.help),
            None => p.help.to_string(),
        };
        cmd = cmd.arg(Arg::new(p.key).long(p.key).value_name("VALUE").help(help));
    }
    cmd.arg(
        Arg::new("config")
            .long("config")
            .value_name("FILE")
            .help("key=value file supplying any option above; flags take precedence"),
    )
}

fn read_config(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Runtime(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("{}:{}: expected key=value", path.display(), idx + 1)))?;
        map.insert(k.trim().trim_start_matches("--").to_string(), v.trim().to_string());
    }
    Ok(map)
}

/// Resolved parameter values for one command invocation.
pub struct Resolved {
    command: String,
    values: Vec<(&'static str, Option<String>)>,
}

impl Resolved {
    pub fn new(command: &str, params: &'static [Param], matches: &ArgMatches) -> Result<Self, CliError> {
        let mut file = match matches.get_one::<String>("config") {
            Some(path) => read_config(Path::new(path))?,
            None => BTreeMap::new(),
        };
        let values = params
            .iter()
            .map(|p| {
                let from_file = file.remove(p.key);
                let value = matches.get_one::<String>(p.key).cloned().or(from_file).or(p.default.map(str::to_string));
                (p.key, value)
            })
            .collect();
        if let Some(key) = file.keys().next() {
            return Err(CliError::Usage(format!("unknown config key '{key}' for {command}")));
        }
        Ok(Resolved { command: command.to_string(), values })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.iter().find(|(k, _)| *k == key).and_then(|(_, v)| v.as_deref())
    }

    pub fn opt<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: Display,
    {
        self.raw(key)
            .map(|v| v.parse::<T>().map_err(|e| CliError::Usage(format!("invalid --{key} '{v}': {e}"))))
            .transpose()
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<T, CliError>
    where
        T::Err: Display,
    {
        self.opt(key)?.ok_or_else(|| CliError::Usage(format!("missing required --{key}")))
    }

    /// Comma-separated list.
    pub fn list<T: FromStr>(&self, key: &str) -> Result<Vec<T>, CliError>
    where
        T::Err: Display,
    {
        let raw: String = self.get(key)?;
        raw.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<T>().map_err(|e| CliError::Usage(format!("invalid --{key} entry '{s}': {e}"))))
            .collect()
    }

    /// `# netinf <command> --key value ...` reproducing this invocation.
    pub fn header(&self) -> String {
        let mut line = format!("# netinf {}", self.command);
        for (k, v) in &self.values {
            if let Some(v) = v {
                line.push_str(&format!(" --{k} {}", quote(v)));
            }
        }
        line
    }
}

fn quote(v: &str) -> String {
    if !v.is_empty() && v.chars().all(|c| c.is_ascii_alphanumeric() || "-_.,:/+=".contains(c)) {
        v.to_string()
    } else {
        format!("'{}'", v.replace('\'', r"'\''"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    static PARAMS: [Param; 3] =
        [param("n", Some("10"), "count"), param("model", Some("exp"), "model"), param("graph", None, "graph file")];

    fn resolve(args: &[&str]) -> Result<Resolved, CliError> {
        let cmd = add_params(Command::new("t"), &PARAMS);
        let m = cmd.try_get_matches_from(std::iter::once("t").chain(args.iter().copied())).unwrap();
        Resolved::new("t", &PARAMS, &m)
    }

    #[test]
    fn flags_override_file_override_defaults() {
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("a.cfg");
        std::fs::write(&cfg, "# comment\nn = 20\nmodel=ray\n").unwrap();
        let r = resolve(&["--config", cfg.to_str().unwrap(), "--n", "30"]).unwrap();
        assert_eq!(r.get::<usize>("n").unwrap(), 30);
        assert_eq!(r.raw("model"), Some("ray"));
        assert_eq!(r.opt::<String>("graph").unwrap(), None);
        assert_eq!(r.header(), "# netinf t --n 30 --model ray");
        let r = resolve(&[]).unwrap();
        assert_eq!(r.get::<usize>("n").unwrap(), 10);
    }

    #[test]
    fn bad_values_and_keys_are_usage_errors() {
        let r = resolve(&["--n", "x"]).unwrap();
        assert!(matches!(r.get::<usize>("n"), Err(CliError::Usage(_))));
        assert!(matches!(r.get::<String>("graph"), Err(CliError::Usage(_))));
        let dir = tempfile::tempdir().unwrap();
        let cfg = dir.path().join("b.cfg");
        std::fs::write(&cfg, "bogus=1\n").unwrap();
        assert!(matches!(resolve(&["--config", cfg.to_str().unwrap()]), Err(CliError::Usage(_))));
    }

    #[test]
    fn header_quotes_awkward_values() {
        assert_eq!(quote("a b"), "'a b'");
        assert_eq!(quote("chain:4,chain:8"), "chain:4,chain:8");
        assert_eq!(quote(""), "''");
    }
}
