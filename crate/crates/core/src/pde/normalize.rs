use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::operator::DiffOperator;
use crate::symbolic::RationalNumber;

/// Clears rational content and orients the sign: the lowest coordinate monomial
/// of the own pure second-derivative coefficient gets a positive lowest parameter term
/// (first present term in display order when that derivative is absent).
/// Returns the normalized operator and the factor k with `op = k · normalized`.
pub fn normalize_equation(op: &DiffOperator, axis: usize) -> (DiffOperator, RationalNumber) {
    if op.is_zero() {
        return (op.clone(), RationalNumber::one());
    }
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for (_, c) in op.terms() {
        for (_, p) in c.terms() {
            for (_, r) in p.terms() {
                den_lcm = den_lcm.lcm(r.denom());
                num_gcd = num_gcd.gcd(r.numer());
            }
        }
    }
    let mut k = RationalNumber::new(num_gcd, den_lcm);

    let dim = 3;
    let mut own = [0; 3];
    own[axis] = 2;
    let pivot = if op.coeff(own).is_zero() {
        op.ordered_terms(dim, axis).first().map(|(_, c)| (*c).clone()).unwrap()
    } else {
        op.coeff(own)
    };
    let (_, lead) = pivot.graded_terms()[0];
    let (_, r) = lead.terms().next().unwrap();
    if r.is_negative() {
        k = -k;
    }
    let inv = RationalNumber::one() / &k;
    (op.map_coeffs(|c| c.scale_rational(&inv)), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::expr::parse_tripoly;
    use crate::symbolic::rational::rat;

    fn cp(s: &str) -> crate::symbolic::CoordPoly {
        parse_tripoly(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn scale_and_sign() {
        let mut op = DiffOperator::zero();
        op.add_term([2, 0, 0], cp("-x/2 + x^2/2"));
        op.add_term([0, 0, 0], cp("a*b/2"));
        let (n, k) = normalize_equation(&op, 0);
        assert_eq!(k, rat(-1, 2));
        assert_eq!(n.coeff([2, 0, 0]), cp("x - x^2"));
        assert_eq!(n.coeff([0, 0, 0]), cp("-a*b"));
        let (again, k2) = normalize_equation(&n, 0);
        assert_eq!(again, n);
        assert_eq!(k2, rat(1, 1));
    }

    #[test]
    fn fallback_pivot() {
        let mut op = DiffOperator::zero();
        op.add_term([1, 0, 0], cp("-3"));
        op.add_term([0, 0, 0], cp("6"));
        let (n, k) = normalize_equation(&op, 0);
        assert_eq!(k, rat(-3, 1));
        assert_eq!(n.coeff([1, 0, 0]), cp("1"));
    }
}
