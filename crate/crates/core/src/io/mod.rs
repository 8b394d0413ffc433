//! Text formats.
//!
//! * chirotope files: a header line `r n` followed by one line of `C(n, r)`
//!   characters from `+`, `-`, `0`, one per ascending `r`-subset of
//!   `{1, ..., n}` in lexicographic order (`{1,2} {1,3} {2,3}` for `n = 3`,
//!   `r = 2`);
//! * hyperline sequence JSON, recursive by rank, with `~e` for a barred
//!   element;
//! * vector files: CSV rows of integers or `p/q` fractions.

pub mod chi;
pub mod hls_json;
pub mod vecfile;

use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Chi,
    Hls,
    Vec,
}

impl Format {
    /// Guess from the extension, then from the content.
    pub fn detect(path: &Path, text: &str) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("chi") => return Format::Chi,
            Some("json") | Some("hls") => return Format::Hls,
            Some("csv") | Some("vec") => return Format::Vec,
            _ => {}
        }
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            Format::Hls
        } else if trimmed.lines().next().is_some_and(|l| !l.contains(',')) {
            Format::Chi
        } else {
            Format::Vec
        }
    }
}
