use crate::error::{HornError, Result};
use crate::symbolic::Scalar;

/// (a)_k for any integer k; (a)_{-k} = 1/[(a-1)(a-2)…(a-k)].
pub fn pochhammer<T: Scalar>(a: &T, k: i64) -> Result<T> {
    let mut acc = T::one();
    if k >= 0 {
        for j in 0..k {
            acc = acc.mul(&a.add(&T::from_i64(j)));
        }
        return Ok(acc);
    }
    for j in 1..=-k {
        let f = a.sub(&T::from_i64(j));
        if f.is_zero() {
            return Err(HornError::Pole { factor: format!("{} - {j}", a.describe()) });
        }
        acc = acc.mul(&f);
    }
    Ok(T::one().div(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rational::{rat, rat_int};

    #[test]
    fn values() {
        assert_eq!(pochhammer(&rat(7, 3), 0).unwrap(), rat_int(1));
        assert_eq!(pochhammer(&rat_int(2), 3).unwrap(), rat_int(24));
        assert_eq!(pochhammer(&rat_int(5), -2).unwrap(), rat(1, 12));
        assert!(matches!(pochhammer(&rat_int(2), -3), Err(HornError::Pole { .. })));
        assert_eq!(pochhammer(&rat_int(-2), 3).unwrap(), rat_int(0));
    }

    #[test]
    fn negative_shift_matches_gamma_ratio() {
        // Γ(ν+n)/Γ(ν) at ν = 5.5, n = -2 is 1/(4.5·3.5)
        let v: f64 = pochhammer(&5.5f64, -2).unwrap();
        assert!((v - 1.0 / (4.5 * 3.5)).abs() < 1e-15);
    }
}
