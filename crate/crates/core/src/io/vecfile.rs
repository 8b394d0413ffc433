use num_rational::BigRational;

use crate::chirotope::VectorConfig;
use crate::error::{OmError, Result};
use crate::exact::parse_rational;

pub fn parse(text: &str) -> Result<VectorConfig> {
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut width = None;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 1;
        for field in line.split(',') {
            let x = parse_rational(field).map_err(|m| OmError::parse(i + 1, col, m))?;
            row.push(x);
            col += field.chars().count() + 1;
        }
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(OmError::parse(
                    i + 1,
                    1,
                    format!("row has {} entries, expected {w}", row.len()),
                ))
            }
            _ => {}
        }
        if row
            .iter()
            .all(|x| *x == BigRational::from_integer(0.into()))
        {
            return Err(OmError::parse(i + 1, 1, "zero vector"));
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(OmError::parse(1, 1, "no vectors"));
    }
    VectorConfig::new(rows)
}

pub fn serialize(v: &VectorConfig) -> String {
    let mut out = String::new();
    for row in v.rows() {
        let fields: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_exact_rows() {
        let v = parse("1,0\n0,1\n-1,1\n").unwrap();
        assert_eq!(v.n(), 3);
        assert_eq!(v.chirotope().unwrap().values(), &[1, 1, 1]);
        let v = parse("1/2, -3\n 4/6,1\n").unwrap();
        assert_eq!(serialize(&v), "1/2,-3\n2/3,1\n");
    }

    #[test]
    fn rejects_floats_and_ragged_rows() {
        assert!(matches!(
            parse("1.0,0\n"),
            Err(OmError::Parse {
                line: 1,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            parse("1,0\n0,2e1\n"),
            Err(OmError::Parse {
                line: 2,
                column: 3,
                ..
            })
        ));
        assert!(matches!(
            parse("1,0\n1\n"),
            Err(OmError::Parse { line: 2, .. })
        ));
        assert!(matches!(parse("0,0\n"), Err(OmError::Parse { .. })));
        assert!(matches!(parse("\n\n"), Err(OmError::Parse { .. })));
    }
}
