use crate::chirotope::SignMap;
use crate::error::{OmError, Result};
use crate::simplex::binomial;

pub fn parse(text: &str) -> Result<SignMap> {
    let mut lines = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines.next().unwrap_or("");
    let fields: Vec<(usize, &str)> = header
        .split(' ')
        .scan(0usize, |col, f| {
            let start = *col;
            *col += f.len() + 1;
            Some((start + 1, f))
        })
        .filter(|(_, f)| !f.is_empty())
        .collect();
    if fields.len() != 2 {
        return Err(OmError::parse(1, 1, "header must be `r n`"));
    }
    let num = |(col, f): (usize, &str)| -> Result<usize> {
        match f.parse::<usize>() {
            Ok(v) if v > 0 && f.bytes().all(|b| b.is_ascii_digit()) => Ok(v),
            _ => Err(OmError::parse(
                1,
                col,
                format!("expected a positive integer, got {f:?}"),
            )),
        }
    };
    let r = num(fields[0])?;
    let n = num(fields[1])?;
    if r > n {
        return Err(OmError::parse(
            1,
            fields[0].0,
            format!("rank {r} exceeds n = {n}"),
        ));
    }
    let expected = binomial(n, r);
    if expected > 1 << 26 {
        return Err(OmError::SizeGuard(format!(
            "C({n},{r}) = {expected} sign entries"
        )));
    }
    let body = lines.next().unwrap_or("");
    let mut values = Vec::with_capacity(expected as usize);
    for (i, c) in body.chars().enumerate() {
        values.push(match c {
            '+' => 1,
            '-' => -1,
            '0' => 0,
            _ => {
                return Err(OmError::parse(
                    2,
                    i + 1,
                    format!("unexpected character {c:?}"),
                ))
            }
        });
    }
    if values.len() as u64 != expected {
        return Err(OmError::parse(
            2,
            values.len() + 1,
            format!(
                "body has {} signs, expected C({n},{r}) = {expected}",
                values.len()
            ),
        ));
    }
    for (i, rest) in lines.enumerate() {
        if !rest.trim().is_empty() {
            return Err(OmError::parse(i + 3, 1, "trailing content after body"));
        }
    }
    SignMap::standard(n, r, values)
}

/// `r n\n<body>\n`. Element labels are not recorded.
pub fn serialize(m: &SignMap) -> String {
    format!("{} {}\n{}\n", m.rank(), m.n(), m.body_string())
}
