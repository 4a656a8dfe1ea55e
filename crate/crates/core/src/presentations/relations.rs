use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{LieType, PresentationError};
use crate::polycore::{GeneratorMap, GradingSpec, Polynomial};

/// A relation together with its display label, e.g. `R^3` or `S^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledRelation {
    pub label: String,
    pub poly: Polynomial<BigInt>,
}

/// Generators `c1..cm` with `deg ci = 2i`.
pub fn c_grading(m: usize) -> GradingSpec {
    GradingSpec::indexed("c", m, 2)
}

/// Generators `tau1..taum` with `deg taui = 2i`.
pub fn tau_grading(m: usize) -> GradingSpec {
    GradingSpec::indexed("tau", m, 2)
}

/// `delta_p = 1` if `p <= k`, else 2 (so `delta_0 = 1`).
pub fn delta(p: u32, k: u32) -> u32 {
    if p <= k {
        1
    } else {
        2
    }
}

/// Generator `j` of `grading` with `x_0 = 1` and `x_j = 0` outside `1..=len`.
fn gen(grading: &GradingSpec, j: i64) -> Polynomial<BigInt> {
    if j == 0 {
        Polynomial::one(grading)
    } else if j < 0 || j as usize > grading.len() {
        Polynomial::zero(grading)
    } else {
        Polynomial::variable(grading, j as usize - 1)
    }
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// The Toeplitz determinants `D_0..=D_p` of `(a_{1+j-i})`, where `a_j` is the
/// `j`-th generator (scaled by `delta_j` when `delta_k` is given).
fn toeplitz_determinants(
    grading: &GradingSpec,
    p: u32,
    delta_k: Option<u32>,
) -> Vec<Polynomial<BigInt>> {
    let a = |j: u32| -> Polynomial<BigInt> {
        let x = gen(grading, j as i64);
        match delta_k {
            Some(k) => x.scale(&int(delta(j, k) as i64)),
            None => x,
        }
    };
    // Expanding along the first row: D_q = sum_r (-1)^(r-1) a_r D_(q-r), since a_0 = 1.
    let mut dets = vec![Polynomial::one(grading)];
    for q in 1..=p {
        let mut d = Polynomial::zero(grading);
        for r in 1..=q {
            let term = &a(r) * &dets[(q - r) as usize];
            d = if r % 2 == 1 { &d + &term } else { &d - &term };
        }
        dets.push(d);
    }
    dets
}

/// `det(a_{1+j-i})_{1<=i,j<=p}` with `a_0 = 1`, `a_q = 0` for `q < 0` or beyond the
/// grading; with `delta_k = Some(k)` the entries are `delta_q * x_q`.
pub fn jacobi_determinant(
    grading: &GradingSpec,
    p: u32,
    delta_k: Option<u32>,
) -> Polynomial<BigInt> {
    toeplitz_determinants(grading, p, delta_k)
        .pop()
        .expect("at least D_0")
}

fn check(n: u32, k: u32) -> Result<(), PresentationError> {
    if k > n {
        return Err(PresentationError::InvalidParameters(format!(
            "need k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// Relations of `H^*(IG(n-k, 2n))` in `c1..c_{n+k}`: `R^p` then `S^s`.
pub fn relations_finite_c(n: u32, k: u32) -> Result<Vec<LabeledRelation>, PresentationError> {
    check(n, k)?;
    let g = c_grading((n + k) as usize);
    let dets = toeplitz_determinants(&g, n + k, None);
    let mut out = Vec::new();
    for p in (n - k + 1)..=(n + k) {
        out.push(LabeledRelation {
            label: format!("R^{p}"),
            poly: dets[p as usize].clone(),
        });
    }
    for s in (k + 1)..=n {
        let s_ = s as i64;
        let mut poly = &gen(&g, s_) * &gen(&g, s_);
        for i in 1..=((n + k - s) as i64) {
            let sign = if i % 2 == 0 { 2 } else { -2 };
            poly = &poly + &(&gen(&g, s_ + i) * &gen(&g, s_ - i)).scale(&int(sign));
        }
        out.push(LabeledRelation {
            label: format!("S^{s}"),
            poly,
        });
    }
    Ok(out)
}

/// Relations of `H^*(OG(n-k, 2n+1))` in `tau1..tau_{n+k}`.
pub fn relations_finite_b(n: u32, k: u32) -> Result<Vec<LabeledRelation>, PresentationError> {
    check(n, k)?;
    let g = tau_grading((n + k) as usize);
    let dets = toeplitz_determinants(&g, n + k, Some(k));
    let mut out = Vec::new();
    for p in (n - k + 1)..=n {
        out.push(LabeledRelation {
            label: format!("R^{p}"),
            poly: dets[p as usize].clone(),
        });
    }
    for p in (n + 1)..=(n + k) {
        let mut poly = Polynomial::zero(&g);
        for r in (k + 1)..=p {
            let term = &gen(&g, r as i64) * &dets[(p - r) as usize];
            poly = if r % 2 == 0 {
                &poly + &term
            } else {
                &poly - &term
            };
        }
        out.push(LabeledRelation {
            label: format!("R^{p}"),
            poly,
        });
    }
    for s in (k + 1)..=n {
        out.push(LabeledRelation {
            label: format!("S^{s}"),
            poly: s_bar(&g, s, k),
        });
    }
    Ok(out)
}

/// `tau_s^2 + sum_{i=1}^{s} (-1)^i delta_{s-i} tau_{s+i} tau_{s-i}`.
fn s_bar(g: &GradingSpec, s: u32, k: u32) -> Polynomial<BigInt> {
    let s_ = s as i64;
    let mut poly = &gen(g, s_) * &gen(g, s_);
    for i in 1..=s_ {
        let coef = delta((s_ - i) as u32, k) as i64 * if i % 2 == 0 { 1 } else { -1 };
        poly = &poly + &(&gen(g, s_ + i) * &gen(g, s_ - i)).scale(&int(coef));
    }
    poly
}

/// `c_s^2 + 2 sum_{i=1}^{s} (-1)^i c_{s+i} c_{s-i}`.
fn s_stable_c(g: &GradingSpec, s: u32) -> Polynomial<BigInt> {
    let s_ = s as i64;
    let mut poly = &gen(g, s_) * &gen(g, s_);
    for i in 1..=s_ {
        let sign = if i % 2 == 0 { 2 } else { -2 };
        poly = &poly + &(&gen(g, s_ + i) * &gen(g, s_ - i)).scale(&int(sign));
    }
    poly
}

/// Relations `S^s` (`s > k`, `4s <= cap`) of the stable ring, over generators with `2i <= cap`.
/// The list is empty when `cap < 4(k+1)`.
pub fn relations_stable(
    ty: LieType,
    k: u32,
    cap: u32,
) -> Result<Vec<LabeledRelation>, PresentationError> {
    if !cap.is_multiple_of(2) {
        return Err(PresentationError::OddCap(cap));
    }
    let m = (cap / 2) as usize;
    let g = match ty {
        LieType::C => c_grading(m),
        LieType::B => tau_grading(m),
    };
    Ok(((k + 1)..)
        .take_while(|s| 4 * s <= cap)
        .map(|s| LabeledRelation {
            label: format!("S^{s}"),
            poly: match ty {
                LieType::C => s_stable_c(&g, s),
                LieType::B => s_bar(&g, s, k),
            },
        })
        .collect())
}

/// Maps `tau_i -> c_i` for `i <= k` and `tau_i -> c_i / 2` for `i > k`.
pub fn tau_to_c(
    k: u32,
    p: &Polynomial<BigRational>,
) -> Result<Polynomial<BigRational>, PresentationError> {
    let target = c_grading(p.grading().len());
    let mut map = GeneratorMap::new(p.grading(), Polynomial::one(&target));
    for i in 0..p.grading().len() {
        let c = BigRational::new(BigInt::one(), int(delta(i as u32 + 1, k) as i64));
        map.set(i, Polynomial::variable(&target, i).scale(&c));
    }
    Ok(map.apply(p)?)
}

/// Inverse of [`tau_to_c`]: `c_i -> delta_i tau_i`.
pub fn c_to_tau(
    k: u32,
    p: &Polynomial<BigRational>,
) -> Result<Polynomial<BigRational>, PresentationError> {
    let target = tau_grading(p.grading().len());
    let mut map = GeneratorMap::new(p.grading(), Polynomial::one(&target));
    for i in 0..p.grading().len() {
        let d = BigRational::from_integer(int(delta(i as u32 + 1, k) as i64));
        map.set(i, Polynomial::variable(&target, i).scale(&d));
    }
    Ok(map.apply(p)?)
}

/// `c_i -> delta_i tau_i` on integral polynomials.
pub fn c_to_tau_integral(
    k: u32,
    p: &Polynomial<BigInt>,
) -> Result<Polynomial<BigInt>, PresentationError> {
    let target = tau_grading(p.grading().len());
    let mut map = GeneratorMap::new(p.grading(), Polynomial::one(&target));
    for i in 0..p.grading().len() {
        map.set(
            i,
            Polynomial::variable(&target, i).scale(&int(delta(i as u32 + 1, k) as i64)),
        );
    }
    Ok(map.apply(p)?)
}

/// The rewritten relation `c_s^2 + 2 sum_{i=1}^{s} (-1)^i c_{s+i} c_{s-i}`, over `grading`.
pub fn s_hat(grading: &GradingSpec, s: u32) -> Polynomial<BigInt> {
    s_stable_c(grading, s)
}

/// The stable type-B relation `S^s` in the tau generators of `grading`.
pub fn s_bar_stable(grading: &GradingSpec, s: u32, k: u32) -> Polynomial<BigInt> {
    s_bar(grading, s, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(rels: &[LabeledRelation]) -> Vec<String> {
        rels.iter()
            .map(|r| format!("{}: {}", r.label, r.poly))
            .collect()
    }

    #[test]
    fn determinants() {
        let g = c_grading(4);
        assert_eq!(jacobi_determinant(&g, 1, None).to_string(), "c1");
        assert_eq!(jacobi_determinant(&g, 2, None).to_string(), "c1^2 - c2");
        assert_eq!(
            jacobi_determinant(&g, 3, None).to_string(),
            "c1^3 - 2*c1*c2 + c3"
        );
        let t = tau_grading(4);
        assert_eq!(
            jacobi_determinant(&t, 2, Some(1)).to_string(),
            "tau1^2 - 2*tau2"
        );
    }

    #[test]
    fn finite_c_examples() {
        assert_eq!(
            show(&relations_finite_c(2, 1).unwrap()),
            [
                "R^2: c1^2 - c2",
                "R^3: c1^3 - 2*c1*c2 + c3",
                "S^2: -2*c1*c3 + c2^2"
            ]
        );
        assert_eq!(
            show(&relations_finite_c(2, 0).unwrap()),
            ["S^1: c1^2 - 2*c2", "S^2: c2^2"]
        );
        let r = relations_finite_c(3, 1).unwrap();
        assert_eq!(r.iter().filter(|x| x.label.starts_with('R')).count(), 2);
        assert_eq!(r.iter().filter(|x| x.label.starts_with('S')).count(), 2);
        assert!(relations_finite_c(1, 2).is_err());
    }

    #[test]
    fn finite_b_examples() {
        assert_eq!(
            show(&relations_finite_b(2, 1).unwrap()),
            [
                "R^2: tau1^2 - 2*tau2",
                "R^3: tau1*tau2 - tau3",
                "S^2: -tau1*tau3 + tau2^2"
            ]
        );
        assert_eq!(
            (1..=4).map(|p| delta(p, 2)).collect::<Vec<_>>(),
            [1, 1, 2, 2]
        );
    }

    #[test]
    fn stable_examples() {
        assert_eq!(
            show(&relations_stable(LieType::C, 1, 8).unwrap()),
            ["S^2: -2*c1*c3 + c2^2 + 2*c4"]
        );
        assert_eq!(
            show(&relations_stable(LieType::C, 1, 12).unwrap())[1],
            "S^3: 2*c1*c5 - 2*c2*c4 + c3^2 - 2*c6"
        );
        assert_eq!(
            show(&relations_stable(LieType::B, 1, 8).unwrap()),
            ["S^2: -tau1*tau3 + tau2^2 + tau4"]
        );
        assert!(relations_stable(LieType::C, 1, 6).unwrap().is_empty());
    }

    #[test]
    fn tau_c_conversion() {
        let t = tau_grading(3);
        let p = Polynomial::<BigRational>::parse("tau2", &t).unwrap();
        assert_eq!(tau_to_c(1, &p).unwrap().to_string(), "1/2*c2");
        let p = Polynomial::<BigRational>::parse("tau1", &t).unwrap();
        assert_eq!(tau_to_c(1, &p).unwrap().to_string(), "c1");
        let p = Polynomial::<BigRational>::parse("tau1^2 - 3*tau2*tau1 + tau3", &t).unwrap();
        assert_eq!(c_to_tau(1, &tau_to_c(1, &p).unwrap()).unwrap(), p);
    }
}
