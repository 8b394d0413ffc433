//! Exhaustive enumeration of chirotopes on `{1, ..., n}`.

use rayon::prelude::*;

use crate::chirotope::{is_chirotope, SignMap};
use crate::error::{OmError, Result};
use crate::limits::Limits;
use crate::simplex::binomial;

const CHUNK: u64 = 1 << 12;

/// Every chirotope of rank `r` on `n` elements (only uniform ones if
/// `uniform`), as value vectors in ascending body order (`-` < `0` < `+`).
///
/// The candidate space is split into fixed chunks checked in parallel on the
/// current rayon pool; the result does not depend on the pool size.
pub fn enumerate(n: usize, r: usize, uniform: bool, limits: &Limits) -> Result<Vec<Vec<i8>>> {
    if r == 0 || r > n {
        return Err(OmError::Usage(format!(
            "need 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    let positions = binomial(n, r);
    if positions > limits.max_positions as u64 {
        return Err(OmError::SizeGuard(format!(
            "enumeration over C({n},{r}) = {positions} sign positions exceeds {}",
            limits.max_positions
        )));
    }
    let digits: &[i8] = if uniform { &[-1, 1] } else { &[-1, 0, 1] };
    let base = digits.len() as u64;
    let total = base
        .checked_pow(positions as u32)
        .ok_or_else(|| OmError::SizeGuard("candidate count overflows".into()))?;
    let chunks = total.div_ceil(CHUNK);
    let per_chunk: Vec<Vec<Vec<i8>>> = (0..chunks)
        .into_par_iter()
        .map(|c| -> Result<Vec<Vec<i8>>> {
            let mut found = Vec::new();
            for idx in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let mut values = vec![0i8; positions as usize];
                let mut rest = idx;
                for v in values.iter_mut().rev() {
                    *v = digits[(rest % base) as usize];
                    rest /= base;
                }
                let m = SignMap::standard(n, r, values)?;
                if is_chirotope(&m, limits)? {
                    found.push(m.values().to_vec());
                }
            }
            Ok(found)
        })
        .collect::<Result<_>>()?;
    Ok(per_chunk.into_iter().flatten().collect())
}
