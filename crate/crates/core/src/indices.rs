//! Exact degree-based indices over arbitrary-precision integers.
//!
//! No floating point appears anywhere: equality characterizations need
//! exact ties, and the second multiplicative Zagreb index leaves 64-bit
//! range already for modest stars.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Arbitrary-precision nonnegative integer; serialized as a decimal string
/// in all report output.
pub type ExactNat = BigUint;

/// First Zagreb index: sum of squared degrees.
pub fn first_zagreb(t: &Tree) -> ExactNat {
    (0..t.vertex_count())
        .map(|v| {
            let d = t.degree(v) as u64;
            BigUint::from(d * d)
        })
        .sum()
}

/// Second Zagreb index: sum over edges of endpoint degree products.
pub fn second_zagreb(t: &Tree) -> ExactNat {
    t.edges()
        .into_iter()
        .map(|(u, v)| BigUint::from(t.degree(u) as u64 * t.degree(v) as u64))
        .sum()
}

/// First multiplicative Zagreb index: product of squared degrees.
/// Defined for n >= 2 only; the single-vertex tree has degree 0 and would
/// annihilate the product.
pub fn pi1(t: &Tree) -> Result<ExactNat> {
    if t.vertex_count() < 2 {
        return Err(Error::SingleVertexIndex);
    }
    let mut p = BigUint::one();
    for v in 0..t.vertex_count() {
        let d = BigUint::from(t.degree(v) as u64);
        p *= &d * &d;
    }
    Ok(p)
}

/// Second multiplicative Zagreb index, edge form: product over edges of
/// endpoint degree products. Cross-checked against the vertex-power form
/// in debug builds.
pub fn pi2(t: &Tree) -> Result<ExactNat> {
    if t.vertex_count() < 2 {
        return Err(Error::SingleVertexIndex);
    }
    let mut p = BigUint::one();
    for (u, v) in t.edges() {
        p *= BigUint::from(t.degree(u) as u64 * t.degree(v) as u64);
    }
    debug_assert_eq!(p, pi2_vertex_form(t)?);
    Ok(p)
}

/// Second multiplicative Zagreb index via the algebraically equal vertex
/// form: product of d(v)^d(v). Kept public as the independent route for
/// the dual-form consistency checks.
pub fn pi2_vertex_form(t: &Tree) -> Result<ExactNat> {
    if t.vertex_count() < 2 {
        return Err(Error::SingleVertexIndex);
    }
    let mut p = BigUint::one();
    for v in 0..t.vertex_count() {
        let d = t.degree(v) as u64;
        p *= BigUint::from(d).pow(d as u32);
    }
    Ok(p)
}

/// Auxiliary product over vertices of (d(v) + 1). Defined from n = 1.
pub fn f_aux(t: &Tree) -> ExactNat {
    let mut p = BigUint::one();
    for v in 0..t.vertex_count() {
        p *= BigUint::from(t.degree(v) as u64 + 1);
    }
    p
}

/// Auxiliary product over vertices of (d(v) + 1)^(d(v) + 1).
pub fn h_aux(t: &Tree) -> ExactNat {
    let mut p = BigUint::one();
    for v in 0..t.vertex_count() {
        let d = t.degree(v) as u64 + 1;
        p *= BigUint::from(d).pow(d as u32);
    }
    p
}

/// Exact nonnegative rational, compared by cross-multiplication. Not kept
/// in lowest terms.
#[derive(Clone, Debug)]
pub struct ExactRatio {
    pub num: ExactNat,
    pub den: ExactNat,
}

impl PartialEq for ExactRatio {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for ExactRatio {}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some((&self.num * &other.den).cmp(&(&other.num * &self.den)))
    }
}

/// g(x) = x^x / (x-1)^(x-1) as an exact ratio; requires x >= 2.
pub fn g_ratio(x: u64) -> Result<ExactRatio> {
    if x < 2 {
        return Err(Error::RatioDomain(x));
    }
    Ok(ExactRatio {
        num: BigUint::from(x).pow(x as u32),
        den: BigUint::from(x - 1).pow((x - 1) as u32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, star};
    use num_traits::ToPrimitive;

    fn as_u64(x: &ExactNat) -> u64 {
        x.to_u64().unwrap()
    }

    #[test]
    fn zagreb_sums() {
        let p4 = path(4).unwrap();
        assert_eq!(as_u64(&first_zagreb(&p4)), 10);
        assert_eq!(as_u64(&second_zagreb(&p4)), 8);
        assert_eq!(as_u64(&first_zagreb(&star(5).unwrap())), 20);
    }

    #[test]
    fn multiplicative_zagreb_small() {
        assert_eq!(as_u64(&pi1(&star(5).unwrap()).unwrap()), 16);
        assert_eq!(as_u64(&pi1(&path(5).unwrap()).unwrap()), 64);
        assert_eq!(as_u64(&pi2(&star(5).unwrap()).unwrap()), 256);
        assert_eq!(as_u64(&pi2(&path(5).unwrap()).unwrap()), 64);
    }

    #[test]
    fn path_and_star_closed_forms() {
        for n in 2..=20u32 {
            let p = path(n as usize).unwrap();
            let s = star(n as usize).unwrap();
            let four_pow = BigUint::from(4u32).pow(n.saturating_sub(2));
            assert_eq!(pi1(&p).unwrap(), four_pow);
            assert_eq!(pi2(&p).unwrap(), four_pow);
            assert_eq!(
                pi1(&s).unwrap(),
                BigUint::from((n as u64 - 1) * (n as u64 - 1))
            );
            assert_eq!(pi2(&s).unwrap(), BigUint::from(n as u64 - 1).pow(n - 1));
        }
    }

    #[test]
    fn aux_products() {
        assert_eq!(as_u64(&f_aux(&star(4).unwrap())), 32);
        assert_eq!(as_u64(&f_aux(&path(4).unwrap())), 36);
        assert_eq!(as_u64(&h_aux(&star(4).unwrap())), 16384);
    }

    #[test]
    fn single_vertex_cases() {
        let t = crate::tree::Tree::from_edge_list(1, &[]).unwrap();
        assert!(pi1(&t).is_err());
        assert!(pi2(&t).is_err());
        assert_eq!(as_u64(&f_aux(&t)), 1);
        assert_eq!(as_u64(&h_aux(&t)), 1);
    }

    #[test]
    fn pi2_forms_agree_up_to_12() {
        for n in 2..=12 {
            for t in crate::enumeration::free_trees(n).unwrap() {
                assert_eq!(pi2(&t).unwrap(), pi2_vertex_form(&t).unwrap());
            }
        }
    }

    #[test]
    fn g_ratio_values_and_monotonicity() {
        let g2 = g_ratio(2).unwrap();
        assert_eq!(as_u64(&g2.num), 4);
        assert_eq!(as_u64(&g2.den), 1);
        let g3 = g_ratio(3).unwrap();
        assert_eq!(as_u64(&g3.num), 27);
        assert_eq!(as_u64(&g3.den), 4);
        assert!(g3 > g2);
        assert!(g_ratio(1).is_err());
        for x in 2..64 {
            assert!(g_ratio(x + 1).unwrap() > g_ratio(x).unwrap());
        }
    }
}
