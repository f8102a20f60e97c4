//! Exact state-complexity arithmetic.
//!
//! `G(k, l, m) = k · C(l, m) · C(k-1, l-m) · (l-m)!` counts the one-way
//! states produced from a sweeping automaton with `k` right-moving and `l`
//! left-moving states, `m` of which cannot turn at `⊢`. `F(n)` is its maximum
//! over `k + l = n`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type BigNat = BigUint;

/// A maximizing argument of `G` together with its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalTriple {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub value: BigNat,
}

fn check_domain(k: usize, l: usize, m: usize) -> Result<()> {
    // m >= l - k + 1, written without underflow.
    if k > 0 && l >= m && m + k > l {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "G({k}, {l}, {m}) needs k > 0, l >= m >= 0 and m >= l - k + 1"
        )))
    }
}

fn falling(n: usize, r: usize) -> BigNat {
    (n - r + 1..=n).fold(BigNat::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, r: usize) -> BigNat {
    if r > n {
        return BigNat::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigNat::one();
    for i in 0..r {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: usize) -> BigNat {
    falling(n, n)
}

/// `G(k, l, m)` in product-of-binomials form.
pub fn g(k: usize, l: usize, m: usize) -> Result<BigNat> {
    check_domain(k, l, m)?;
    Ok(binomial(l, m) * binomial(k - 1, l - m) * factorial(l - m) * k)
}

/// `G(k, l, m) = k! l! / ((k-1-l+m)! m! (l-m)!)`.
pub fn g_factorial_form(k: usize, l: usize, m: usize) -> Result<BigNat> {
    check_domain(k, l, m)?;
    let num = factorial(k) * factorial(l);
    let den = factorial(k - 1 + m - l) * factorial(m) * factorial(l - m);
    Ok(num / den)
}

/// Count for the generalized flavor, with `e` accepting left-moving states among the `m`
/// that cannot turn: `k · C(l, m) · C(m, e) · C(k-1, l-m) · (l-m)!`.
pub fn generalized_count(k: usize, l: usize, m: usize, e: usize) -> Result<BigNat> {
    if e > m {
        return Err(Error::Domain(format!("e = {e} exceeds m = {m}")));
    }
    Ok(g(k, l, m)? * binomial(m, e))
}

/// Admissible `m` for a given `(k, l)`.
pub fn m_range(k: usize, l: usize) -> std::ops::RangeInclusive<usize> {
    (l + 1).saturating_sub(k)..=l
}

/// Maximum of `G(k, l, ·)` and its smallest maximizing `m`.
fn best_m(k: usize, l: usize) -> (usize, BigNat) {
    let range = m_range(k, l);
    let m0 = *range.start();
    let mut value = g(k, l, m0).expect("m0 is admissible");
    let (mut arg, mut best) = (m0, value.clone());
    // G(k, l, m+1) = G(k, l, m) · (l-m) / ((m+1)(k-l+m)), exact.
    for m in m0..l {
        value = value * (l - m) / ((m + 1) * (k + m - l));
        if value > best {
            best = value.clone();
            arg = m + 1;
        }
    }
    (arg, best)
}

/// `F(n)` by exhaustive search. Ties prefer larger `k`, then smaller `m`.
pub fn f_of_n(n: usize) -> Result<OptimalTriple> {
    if n == 0 {
        return Err(Error::Domain("F(n) needs n >= 1".into()));
    }
    let mut best: Option<OptimalTriple> = None;
    for k in (1..=n).rev() {
        let l = n - k;
        let (m, value) = best_m(k, l);
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(OptimalTriple { k, l, m, value });
        }
    }
    Ok(best.expect("n >= 1 has at least one partition"))
}

/// Smallest integer `x` with `2x >= sqrt(d) + c`.
fn ceil_half_sqrt_plus(d: u64, c: i64) -> i64 {
    // 2x - c >= sqrt(d)  <=>  2x - c >= 0 and (2x - c)^2 >= d
    let root = d.isqrt() as i64;
    let mut x = (root + c).div_euclid(2) - 1;
    loop {
        let t = 2 * x - c;
        if t >= 0 && (t as u64) * (t as u64) >= d {
            return x;
        }
        x += 1;
    }
}

/// Closed-form optimal `m` for fixed `(k, l)`:
/// `ceil((sqrt(D) + l - k - 2) / 2)` with `D = (k - l)^2 + 4(l + 1)`,
/// clamped to the admissible range.
pub fn m_opt(k: usize, l: usize) -> usize {
    let diff = k as i64 - l as i64;
    let d = (diff * diff) as u64 + 4 * (l as u64 + 1);
    let raw = ceil_half_sqrt_plus(d, l as i64 - k as i64 - 2);
    let range = m_range(k, l);
    raw.clamp(*range.start() as i64, *range.end() as i64) as usize
}

/// Closed-form optimal partition for `n >= 8`:
/// `k = floor((n+2)/2)`, `l = ceil((n-2)/2)`, `m = m_opt(k, l)`.
pub fn optimal_partition(n: usize) -> Result<OptimalTriple> {
    if n < 8 {
        return Err(Error::Domain(format!(
            "the closed form holds for n >= 8; use f_of_n({n})"
        )));
    }
    let k = (n + 2) / 2;
    let l = n - k;
    let m = m_opt(k, l);
    Ok(OptimalTriple { k, l, m, value: g(k, l, m)? })
}

/// Parity form of the optimal `m` for `n >= 8`: `ceil((sqrt(2n+3) - 3)/2)`
/// for odd `n`, `ceil((sqrt(2n+4) - 4)/2)` for even `n`.
pub fn m_opt_by_parity(n: usize) -> usize {
    let n = n as u64;
    if n % 2 == 1 {
        ceil_half_sqrt_plus(2 * n + 3, -3).max(0) as usize
    } else {
        ceil_half_sqrt_plus(2 * n + 4, -4).max(0) as usize
    }
}

/// `max_{k=1..n} k^(n-k+1) + 1`, the sweeping-2DFA comparison bound.
pub fn sweeping_bound(n: usize) -> BigNat {
    (1..=n)
        .map(|k| BigNat::from(k).pow((n - k + 1) as u32))
        .max()
        .unwrap_or_default()
        + 1u32
}

/// `n (n^n - (n-1)^n) + 1`, the general-2DFA comparison bound.
pub fn kapoutsis_bound(n: usize) -> BigNat {
    let e = n as u32;
    let big = BigNat::from(n);
    &big * (big.pow(e) - BigNat::from(n.saturating_sub(1)).pow(e)) + 1u32
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub f: BigNat,
    pub phi: BigNat,
    pub kapoutsis: BigNat,
}

pub fn table(max_n: usize) -> Vec<TableRow> {
    (1..=max_n)
        .map(|n| TableRow {
            n,
            f: f_of_n(n).expect("n >= 1").value,
            phi: sweeping_bound(n),
            kapoutsis: kapoutsis_bound(n),
        })
        .collect()
}

/// Reference comparison values for `n = 1..=12` as `(F, phi, kapoutsis)`.
pub const REFERENCE_TABLE: [(u64, u64, u64); 12] = [
    (1, 2, 2),
    (2, 3, 7),
    (3, 5, 58),
    (6, 10, 701),
    (12, 28, 10506),
    (24, 82, 186187),
    (72, 257, 3805250),
    (180, 1025, 88099321),
    (480, 4097, 2278824850),
    (1440, 16385, 65132155991),
    (3600, 78126, 2038428376722),
    (12600, 390626, 69332064858421),
];

/// Natural logarithm of an arbitrary-precision natural, from its top 64 bits.
pub fn ln_big(x: &BigNat) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().map_or(f64::NEG_INFINITY, |v| (v as f64).ln());
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 bits fit");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ρ(n) = (n/2 - ln F(n) / ln n) · ln n / n`, which tends to `(1 + ln 2)/2`.
pub fn exponent_estimate(n: usize) -> Result<f64> {
    if n < 8 {
        return Err(Error::Domain(format!("exponent estimate needs n >= 8, got {n}")));
    }
    let f = f_of_n(n)?.value;
    let ln_n = (n as f64).ln();
    Ok((n as f64 / 2.0 - ln_big(&f) / ln_n) * ln_n / n as f64)
}

/// `(1 + ln 2) / 2`.
pub fn exponent_limit() -> f64 {
    (1.0 + std::f64::consts::LN_2) / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigNat {
        BigNat::from(v)
    }

    #[test]
    fn g_reference_values() {
        assert_eq!(g(5, 4, 1).unwrap(), big(480));
        assert_eq!(g(7, 5, 1).unwrap(), big(12600));
        for k in 1..6 {
            assert_eq!(g(k, 0, 0).unwrap(), big(k as u64));
        }
        assert!(g(0, 0, 0).is_err());
        assert!(g(2, 2, 0).is_err());
    }

    #[test]
    fn both_forms_agree() {
        for n in 1..=40 {
            for k in 1..=n {
                let l = n - k;
                for m in m_range(k, l) {
                    assert_eq!(g(k, l, m).unwrap(), g_factorial_form(k, l, m).unwrap(), "({k},{l},{m})");
                }
            }
        }
    }

    #[test]
    fn ratio_stepping_matches_direct_maximum() {
        for k in 1..=20 {
            for l in 0..=20 {
                let (m, v) = best_m(k, l);
                let direct = m_range(k, l).map(|m| g(k, l, m).unwrap()).max().unwrap();
                assert_eq!(v, direct);
                assert_eq!(g(k, l, m).unwrap(), v);
            }
        }
    }

    #[test]
    fn small_f_values() {
        let t = f_of_n(1).unwrap();
        assert_eq!((t.k, t.l, t.m, t.value), (1, 0, 0, big(1)));
        assert_eq!(f_of_n(6).unwrap().value, big(24));
        assert_eq!(f_of_n(10).unwrap().value, big(1440));
        let t = f_of_n(4).unwrap();
        assert_eq!((t.k, t.l, t.m, t.value), (3, 1, 0, big(6)));
    }

    #[test]
    fn m_opt_values() {
        assert_eq!(m_opt(5, 4), 1);
        assert_eq!(m_opt(7, 5), 1);
        for k in 1..8 {
            assert_eq!(m_opt(k, 0), 0);
        }
    }

    #[test]
    fn m_opt_matches_brute_force_argmax_near_diagonal() {
        for k in 2usize..40 {
            for l in [k - 1, k.saturating_sub(2)] {
                let brute = best_m(k, l).1;
                assert_eq!(g(k, l, m_opt(k, l)).unwrap(), brute, "({k},{l})");
            }
        }
    }

    #[test]
    fn closed_form_partitions() {
        let t = optimal_partition(9).unwrap();
        assert_eq!((t.k, t.l, t.m, t.value), (5, 4, 1, big(480)));
        let t = optimal_partition(12).unwrap();
        assert_eq!((t.k, t.l, t.m, t.value), (7, 5, 1, big(12600)));
        assert!(optimal_partition(7).is_err());
        for n in 8..100 {
            assert_eq!(m_opt_by_parity(n), optimal_partition(n).unwrap().m, "n = {n}");
        }
    }

    #[test]
    fn comparison_bounds() {
        assert_eq!(sweeping_bound(5), big(28));
        assert_eq!(kapoutsis_bound(3), big(58));
        assert_eq!(kapoutsis_bound(1), big(2));
    }

    #[test]
    fn table_matches_reference() {
        for (row, &(f, phi, kap)) in table(12).iter().zip(REFERENCE_TABLE.iter()) {
            assert_eq!((row.f.clone(), row.phi.clone(), row.kapoutsis.clone()), (big(f), big(phi), big(kap)));
        }
    }

    #[test]
    fn generalized_counts() {
        assert_eq!(generalized_count(3, 2, 2, 1).unwrap(), big(6));
        assert_eq!(generalized_count(5, 3, 1, 1).unwrap(), big(180));
        assert_eq!(generalized_count(4, 3, 1, 0).unwrap(), g(4, 3, 1).unwrap());
        assert!(generalized_count(4, 3, 1, 2).is_err());
    }

    #[test]
    fn exponent_estimate_from_f8() {
        let ln8 = 8f64.ln();
        let expected = (4.0 - 180f64.ln() / ln8) * ln8 / 8.0;
        assert!((exponent_estimate(8).unwrap() - expected).abs() < 1e-12);
        assert!(exponent_estimate(7).is_err());
    }

    #[test]
    fn ln_big_is_accurate() {
        let x = factorial(300);
        let exact: f64 = (1..=300).map(|i| (i as f64).ln()).sum();
        assert!((ln_big(&x) - exact).abs() / exact < 1e-13);
    }
}
