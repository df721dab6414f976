//! `key = value` files merged into the argument list: a key is appended as
//! `--key value` unless the same flag already appears on the command line.

use std::fs;
use std::path::Path;

/// Flags that name the same option.
const ALIASES: [(&str, &str); 2] = [("case", "problem"), ("problem", "case")];

pub fn parse(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
        let key = k.trim().trim_start_matches("--").replace('_', "-");
        if key.is_empty() || key == "config" {
            return Err(format!("line {}: bad key `{}`", n + 1, k.trim()));
        }
        out.push((key, v.trim().to_string()));
    }
    Ok(out)
}

fn given(args: &[String], key: &str) -> bool {
    let names: Vec<&str> =
        std::iter::once(key).chain(ALIASES.iter().filter(|(a, _)| *a == key).map(|(_, b)| *b)).collect();
    args.iter().any(|a| {
        names.iter().any(|n| {
            let flag = format!("--{n}");
            a == &flag || a.starts_with(&format!("{flag}="))
        })
    })
}

/// Path given by `--config FILE` or `--config=FILE`, if any.
pub fn config_path(args: &[String]) -> Option<String> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

pub fn merge(mut args: Vec<String>, pairs: &[(String, String)]) -> Vec<String> {
    let explicit = args.clone();
    for (k, v) in pairs {
        if given(&explicit, k) {
            continue;
        }
        match v.to_ascii_lowercase().as_str() {
            "true" | "yes" | "on" => args.push(format!("--{k}")),
            "false" | "no" | "off" => {}
            _ => args.push(format!("--{k}={v}")),
        }
    }
    args
}

pub fn load_and_merge(args: Vec<String>) -> Result<Vec<String>, String> {
    let Some(path) = config_path(&args) else { return Ok(args) };
    let text = fs::read_to_string(Path::new(&path)).map_err(|e| format!("cannot read {path}: {e}"))?;
    Ok(merge(args, &parse(&text)?))
}
