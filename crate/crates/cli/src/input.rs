use std::fs;
use std::io::{self, BufRead};
use std::path::Path;

use wellcover::{from_graph6, Graph};

use crate::commands::CliError;

pub fn parse(line: &str) -> Result<Graph, CliError> {
    from_graph6(line).map_err(|e| CliError::input(format!("{line:?}: {e}")))
}

fn parse_lines<I: Iterator<Item = String>>(lines: I, source: &str) -> Result<Vec<(String, Graph)>, CliError> {
    let mut out = Vec::new();
    for (k, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = from_graph6(line)
            .map_err(|e| CliError::input(format!("{source}:{}: {e}", k + 1)))?;
        out.push((line.to_string(), g));
    }
    Ok(out)
}

pub fn read_stdin() -> Result<Vec<(String, Graph)>, CliError> {
    let lines = io::stdin()
        .lock()
        .lines()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::input(format!("stdin: {e}")))?;
    parse_lines(lines.into_iter(), "stdin")
}

pub fn read_file(path: &Path) -> Result<Vec<Graph>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let parsed = parse_lines(text.lines().map(str::to_string), &path.display().to_string())?;
    Ok(parsed.into_iter().map(|(_, g)| g).collect())
}
