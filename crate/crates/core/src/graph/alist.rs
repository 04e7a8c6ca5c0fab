//! Reading and writing parity-check matrices in alist format.
//!
//! ```text
//! N M
//! max_var_degree max_check_degree
//! <N variable degrees>
//! <M check degrees>
//! N lines: 1-indexed check lists of each variable, zero padded
//! M lines: 1-indexed variable lists of each check, zero padded
//! ```

use std::fmt::Write as _;
use std::path::Path;

use super::tanner::TannerGraph;
use crate::error::{Error, Result};

pub fn load_alist(path: impl AsRef<Path>) -> Result<TannerGraph> {
    parse_alist(&std::fs::read_to_string(path)?)
}

pub fn save_alist(g: &TannerGraph, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, to_alist(g))?;
    Ok(())
}

pub fn to_alist(g: &TannerGraph) -> String {
    let max_var = (0..g.n_vars()).map(|v| g.var_degree(v)).max().unwrap_or(0);
    let max_check = (0..g.n_checks()).map(|c| g.check_degree(c)).max().unwrap_or(0);
    let mut out = String::new();
    let join = |it: &mut dyn Iterator<Item = usize>| it.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    writeln!(out, "{} {}", g.n_vars(), g.n_checks()).unwrap();
    writeln!(out, "{max_var} {max_check}").unwrap();
    writeln!(out, "{}", join(&mut (0..g.n_vars()).map(|v| g.var_degree(v)))).unwrap();
    writeln!(out, "{}", join(&mut (0..g.n_checks()).map(|c| g.check_degree(c)))).unwrap();
    for list in g.var_lists() {
        let padded = list.iter().map(|&c| c + 1).chain(std::iter::repeat_n(0, max_var - list.len()));
        writeln!(out, "{}", join(&mut padded.into_iter())).unwrap();
    }
    for list in g.check_lists() {
        let padded = list.iter().map(|&v| v + 1).chain(std::iter::repeat_n(0, max_check - list.len()));
        writeln!(out, "{}", join(&mut padded.into_iter())).unwrap();
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    /// Next non-blank line as integers, with its 1-based line number.
    fn next_numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let numbers = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("'{tok}' is not a non-negative integer"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok((i + 1, numbers));
        }
        Err(Error::Parse { line: self.last + 1, message: format!("unexpected end of file, expected {what}") })
    }
}

fn expect_len(line: usize, values: &[usize], len: usize, what: &str) -> Result<()> {
    if values.len() != len {
        return Err(Error::Parse { line, message: format!("expected {len} {what}, found {}", values.len()) });
    }
    Ok(())
}

pub fn parse_alist(text: &str) -> Result<TannerGraph> {
    let mut lines = Lines { inner: text.lines().enumerate(), last: 0 };
    let (ln, header) = lines.next_numbers("'N M'")?;
    expect_len(ln, &header, 2, "header values")?;
    let (n, m) = (header[0], header[1]);
    let (ln, maxima) = lines.next_numbers("maximum degrees")?;
    expect_len(ln, &maxima, 2, "maximum degrees")?;
    let (ln, var_degrees) = lines.next_numbers("variable degrees")?;
    expect_len(ln, &var_degrees, n, "variable degrees")?;
    let (ln, check_degrees) = lines.next_numbers("check degrees")?;
    expect_len(ln, &check_degrees, m, "check degrees")?;
    if var_degrees.iter().max().copied().unwrap_or(0) > maxima[0]
        || check_degrees.iter().max().copied().unwrap_or(0) > maxima[1]
    {
        return Err(Error::Parse { line: 2, message: "a node degree exceeds the declared maximum".into() });
    }

    let read_lists = |lines: &mut Lines, count: usize, degrees: &[usize], bound: usize, what: &str| {
        let mut lists = Vec::with_capacity(count);
        for (i, &deg) in degrees.iter().enumerate().take(count) {
            let (ln, values) = lines.next_numbers(what)?;
            let mut list = Vec::with_capacity(deg);
            for &x in &values {
                if x == 0 {
                    continue;
                }
                if x > bound {
                    return Err(Error::Parse { line: ln, message: format!("index {x} out of range 1..={bound}") });
                }
                if list.contains(&(x - 1)) {
                    return Err(Error::Parse { line: ln, message: format!("parallel edge: index {x} repeated") });
                }
                list.push(x - 1);
            }
            if list.len() != deg {
                return Err(Error::Parse {
                    line: ln,
                    message: format!("{what} {} lists {} entries, declared degree {deg}", i + 1, list.len()),
                });
            }
            lists.push(list);
        }
        Ok::<_, Error>(lists)
    };
    let var_lists = read_lists(&mut lines, n, &var_degrees, m, "variable")?;
    let check_start = lines.last + 1;
    let check_lists = read_lists(&mut lines, m, &check_degrees, n, "check")?;

    TannerGraph::from_both_lists(var_lists, check_lists)
        .map_err(|e| Error::Parse { line: check_start, message: e.to_string() })
}
