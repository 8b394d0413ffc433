//! Shared oracles and generators for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use om_core::chirotope::VectorConfig;
use om_core::Chirotope;
use rand::Rng;

/// Ascending `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// A sign map evaluated straight from the definitions: the value of a
/// tuple of signed elements is `sign(permutation) * (-1)^(bars) * value`
/// of its sorted support.
pub struct Literal {
    pub n: usize,
    pub r: usize,
    by_mask: Vec<i8>,
}

impl Literal {
    pub fn new(n: usize, r: usize, values: &[i8]) -> Self {
        let mut by_mask = vec![0i8; 1 << n];
        for (s, &v) in subsets(n, r).iter().zip(values) {
            let mask: usize = s.iter().map(|&i| 1 << i).sum();
            by_mask[mask] = v;
        }
        Literal { n, r, by_mask }
    }

    /// `t` holds `(position, barred)` pairs.
    pub fn chi(&self, t: &[(usize, bool)]) -> i8 {
        let mut mask = 0usize;
        for &(p, _) in t {
            if mask & (1 << p) != 0 {
                return 0;
            }
            mask |= 1 << p;
        }
        let mut sign = self.by_mask[mask];
        for i in 0..t.len() {
            if t[i].1 {
                sign = -sign;
            }
            for j in i + 1..t.len() {
                if t[i].0 > t[j].0 {
                    sign = -sign;
                }
            }
        }
        sign
    }

    fn tuples(&self, len: usize, signed: bool) -> Vec<Vec<(usize, bool)>> {
        let mut out: Vec<Vec<(usize, bool)>> = vec![vec![]];
        for _ in 0..len {
            let mut next = Vec::new();
            for t in &out {
                for p in 0..self.n {
                    for bar in [false, true] {
                        if bar && !signed {
                            continue;
                        }
                        let mut u = t.clone();
                        u.push((p, bar));
                        next.push(u);
                    }
                }
            }
            out = next;
        }
        out
    }

    pub fn c1(&self) -> bool {
        let rest = self.tuples(self.r - 1, false);
        (0..self.n).all(|e| {
            rest.iter().any(|t| {
                let mut u = vec![(e, false)];
                u.extend_from_slice(t);
                self.chi(&u) != 0
            })
        })
    }

    pub fn c3(&self) -> bool {
        let all = self.tuples(self.r, false);
        let nonzero: Vec<&Vec<(usize, bool)>> = all.iter().filter(|t| self.chi(t) != 0).collect();
        for x in &nonzero {
            for y in &nonzero {
                let ok = (0..self.r).any(|i| {
                    let mut u = x[..self.r - 1].to_vec();
                    u.push(y[i]);
                    self.chi(&u) != 0
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Every `x_1..x_r, y_1, y_2` over the signed elements.
    pub fn c4(&self) -> bool {
        let r = self.r;
        if r < 2 {
            return true;
        }
        let xs = self.tuples(r, true);
        let singles: Vec<(usize, bool)> = self.tuples(1, true).into_iter().map(|t| t[0]).collect();
        let mut t = vec![(0, false); r];
        for x in &xs {
            let base = self.chi(x);
            for &y1 in &singles {
                let y1bar = (y1.0, !y1.1);
                for &y2 in &singles {
                    t.copy_from_slice(x);
                    t[r - 2] = y1;
                    let a = self.chi(&t);
                    t.copy_from_slice(x);
                    t[r - 1] = y2;
                    let b = self.chi(&t);
                    t.copy_from_slice(x);
                    t[r - 2] = y2;
                    let c = self.chi(&t);
                    t.copy_from_slice(x);
                    t[r - 1] = y1bar;
                    let d = self.chi(&t);
                    if a * b >= 0 && c * d >= 0 {
                        t.copy_from_slice(x);
                        t[r - 2] = y1;
                        t[r - 1] = y2;
                        if base * self.chi(&t) < 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_chirotope(&self) -> bool {
        self.c1() && self.c3() && self.c4()
    }
}

pub fn literal_is_chirotope(n: usize, r: usize, values: &[i8]) -> bool {
    Literal::new(n, r, values).is_chirotope()
}

/// Every value vector in `{-1,0,1}^len` (or `{-1,1}^len`), ascending.
pub fn all_bodies(len: usize, uniform: bool) -> Vec<Vec<i8>> {
    let digits: &[i8] = if uniform { &[-1, 1] } else { &[-1, 0, 1] };
    let mut out: Vec<Vec<i8>> = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                digits.iter().map(move |&d| {
                    let mut w = v.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    out
}

/// Random full-rank integer configuration with entries in `[lo, hi]`.
pub fn random_config<R: Rng>(rng: &mut R, n: usize, r: usize, lo: i64, hi: i64) -> VectorConfig {
    loop {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..r).map(|_| rng.gen_range(lo..=hi)).collect())
            .collect();
        if rows.iter().any(|row| row.iter().all(|&x| x == 0)) {
            continue;
        }
        let v = VectorConfig::from_integers(&rows).unwrap();
        if v.chirotope().is_ok() {
            return v;
        }
    }
}

pub fn random_uniform_config<R: Rng>(rng: &mut R, n: usize, r: usize, bound: i64) -> VectorConfig {
    loop {
        let v = random_config(rng, n, r, -bound, bound);
        if v.chirotope().unwrap().is_uniform() {
            return v;
        }
    }
}

/// Rank-3 configuration with at least one dependent triple or parallel
/// pair among distinct-looking rows.
pub fn random_degenerate_rank3<R: Rng>(rng: &mut R, n: usize) -> VectorConfig {
    assert!(n >= 4);
    loop {
        let mut rows: Vec<[i64; 3]> = Vec::new();
        while rows.len() < n {
            let k = rows.len();
            let row = if k >= 2 && rng.gen_bool(0.45) {
                let a = rows[rng.gen_range(0..k)];
                let b = rows[rng.gen_range(0..k)];
                let (s, t) = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
                [
                    s * a[0] + t * b[0],
                    s * a[1] + t * b[1],
                    s * a[2] + t * b[2],
                ]
            } else {
                [
                    rng.gen_range(-3..=3),
                    rng.gen_range(-3..=3),
                    rng.gen_range(-3..=3),
                ]
            };
            if row != [0, 0, 0] {
                rows.push(row);
            }
        }
        let v = VectorConfig::from_integers(&rows).unwrap();
        if let Ok(chi) = v.chirotope() {
            if !chi.is_uniform() {
                return v;
            }
        }
    }
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn direction(v: [i64; 3]) -> [i64; 3] {
    let g = v.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    let mut d = v.map(|x| x / g);
    if d.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        d = d.map(|x| -x);
    }
    d
}

/// Vertex and edge counts of the great-circle arrangement `{x : <v, x> = 0}`
/// on the 2-sphere, from cross products.
pub fn geometric_vertices_edges(rows: &[[i64; 3]]) -> (usize, usize) {
    let circles: BTreeSet<[i64; 3]> = rows.iter().map(|&v| direction(v)).collect();
    let circles: Vec<[i64; 3]> = circles.into_iter().collect();
    let mut points = BTreeSet::new();
    let mut edges = 0;
    for &a in &circles {
        let mut on_a = BTreeSet::new();
        for &b in &circles {
            let c = cross(a, b);
            if c != [0, 0, 0] {
                on_a.insert(direction(c));
                points.insert(direction(c));
            }
        }
        edges += 2 * on_a.len();
    }
    (2 * points.len(), edges)
}

pub fn integer_rows3(v: &VectorConfig) -> Vec<[i64; 3]> {
    v.integer_rows()
        .iter()
        .map(|r| {
            let x: Vec<i64> = r.iter().map(|b| i64::try_from(b).unwrap()).collect();
            [x[0], x[1], x[2]]
        })
        .collect()
}

pub fn chi_of(v: &VectorConfig) -> Chirotope {
    v.chirotope().unwrap()
}
