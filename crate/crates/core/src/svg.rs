//! Static SVG of a rank-2 hyperline sequence: one tick per atom on a circle,
//! atom `a` at angle `a * 180 / k` degrees counterclockwise from the east.

use std::fmt::Write;

use crate::error::{OmError, Result};
use crate::hyperline::{Hls, Rank2};

const SIZE: f64 = 320.0;
const RADIUS: f64 = 110.0;
const TICK: f64 = 8.0;
const LABEL: f64 = 135.0;

pub fn render(x: &Hls) -> Result<String> {
    match x {
        Hls::Rank2(x) => Ok(render_rank2(x)),
        other => Err(OmError::Usage(format!(
            "render needs a rank-2 hyperline sequence, got rank {}",
            other.rank()
        ))),
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

pub fn render_rank2(x: &Rank2) -> String {
    let period = x.period();
    let c = SIZE / 2.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = num(SIZE)
    );
    let _ = writeln!(
        out,
        r#"<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black"/>"#,
        c = num(c),
        r = num(RADIUS)
    );
    // Directions for the first half; the second half is their exact negation.
    let half = period.div_ceil(2);
    let dirs: Vec<(f64, f64)> = (0..period)
        .map(|a| {
            let base = a % half.max(1);
            let t = std::f64::consts::TAU * base as f64 / period as f64;
            let (dx, dy) = (t.cos(), -t.sin());
            if a < half {
                (dx, dy)
            } else {
                (-dx, -dy)
            }
        })
        .collect();
    for (a, atom) in x.atoms().iter().enumerate() {
        let (dx, dy) = dirs[a];
        let _ = writeln!(
            out,
            r#"<line class="tick" data-atom="{a}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
            num(c + (RADIUS - TICK) * dx),
            num(c + (RADIUS - TICK) * dy),
            num(c + (RADIUS + TICK) * dx),
            num(c + (RADIUS + TICK) * dy),
        );
        let mut label = String::new();
        for (i, e) in atom.iter().enumerate() {
            if i > 0 {
                label.push(',');
            }
            if e.is_barred() {
                let _ = write!(
                    label,
                    r#"<tspan text-decoration="overline">{}</tspan>"#,
                    e.element()
                );
            } else {
                let _ = write!(label, "{}", e.element());
            }
        }
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle" dominant-baseline="middle" font-family="serif" font-size="14">{label}</text>"#,
            num(c + LABEL * dx),
            num(c + LABEL * dy),
        );
    }
    out.push_str("</svg>\n");
    out
}
