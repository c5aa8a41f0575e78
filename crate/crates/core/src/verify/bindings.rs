use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{HornError, Result};
use crate::eval::coefficient_grid;
use crate::series::{ParamBinding, SeriesDefinition};
use crate::symbolic::rational::rat;
use crate::symbolic::RationalNumber;

pub const MAX_DENOMINATOR: i64 = 16;
const MAX_DRAWS: usize = 200;

/// Stable per-name seed so results do not depend on processing order.
pub fn seed_for(name: &str, salt: u64) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ salt;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Non-integer rational values with denominators in 2..=16.
pub fn random_binding(s: &SeriesDefinition, rng: &mut ChaCha8Rng) -> ParamBinding<RationalNumber> {
    s.params
        .iter()
        .map(|p| {
            let q = rng.gen_range(2..=MAX_DENOMINATOR);
            let v = loop {
                let n = rng.gen_range(-4 * q..=4 * q);
                if n % q != 0 {
                    break rat(n, q);
                }
            };
            (p.clone(), v)
        })
        .collect()
}

/// `count` bindings for which every coefficient through degree `n` is finite.
pub fn nondegenerate_bindings(s: &SeriesDefinition, count: usize, n: u32, seed: u64) -> Result<Vec<ParamBinding<RationalNumber>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..MAX_DRAWS {
        if out.len() == count {
            break;
        }
        let b = random_binding(s, &mut rng);
        if coefficient_grid(s, &b, n).is_ok() {
            out.push(b);
        }
    }
    if out.len() < count {
        return Err(HornError::Refused(format!("{}: no non-degenerate binding found", s.name)));
    }
    Ok(out)
}

/// Floating copy of an exact binding.
pub fn to_f64_binding(b: &ParamBinding<RationalNumber>) -> ParamBinding<f64> {
    b.iter().map(|(k, v)| (k.clone(), crate::symbolic::rational::to_f64(v))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::parse_catalog;
    use num_traits::Signed;

    #[test]
    fn bindings_are_reproducible_and_non_integer() {
        let s = parse_catalog("series G\n  indices: n\n  params: a b c\n  num: a|n; b|n\n  den: c|n\n").unwrap().remove(0);
        let a = nondegenerate_bindings(&s, 3, 10, 7).unwrap();
        let b = nondegenerate_bindings(&s, 3, 10, 7).unwrap();
        assert_eq!(a, b);
        for bind in &a {
            for v in bind.values() {
                assert!(!v.is_integer());
                assert!(*v.denom() <= MAX_DENOMINATOR.into());
                assert!(v.abs() <= rat(4, 1));
            }
        }
        assert_ne!(seed_for("F1", 0), seed_for("F2", 0));
    }
}
