use super::{all_passed, AbstractTriple, IdentityError, Verdict};
use crate::arith::{gcd, Factorization};

/// The full GCD tuple for one abstract input.
///
/// Every field is computed by a direct gcd over the defining products and
/// then cross-checked against the closed forms before the profile is
/// handed out, so a `GcdProfile` in hand already certifies
/// `g*h = i_gcd^2`, `h = g*j^2`, `g = k^2/f`, `i_gcd = e*k/f`, `j = e/k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GcdProfile {
    /// `E = n`.
    pub e: u128,
    /// `F = n^2 / i`, the stand-in for `sigma(q^k) / 2`.
    pub f: u128,
    /// `K = gcd(E, F)`.
    pub k: u128,
    /// `G = gcd(sigma(q^k), sigma(n^2))`.
    pub g: u128,
    /// `H = gcd(n^2, sigma(n^2))`.
    pub h: u128,
    /// `I = gcd(n, sigma(n^2))`.
    pub i_gcd: u128,
    /// `J = I/G = H/I = E/K`.
    pub j: u128,
    /// The index `i` itself; always equal to `h` on valid inputs.
    pub index: u128,
}

impl GcdProfile {
    /// The predicate `G = H`, exposed for experiments; no claim is made
    /// about its truth on genuine odd perfect numbers.
    pub fn g_equals_h(&self) -> bool {
        self.g == self.h
    }
}

fn cross_check(
    identity: &'static str,
    direct: u128,
    closed: Option<u128>,
) -> Result<(), IdentityError> {
    match closed {
        Some(v) if v == direct => Ok(()),
        Some(v) => Err(IdentityError::CrossCheck {
            identity,
            direct,
            closed: v,
        }),
        None => Err(IdentityError::CrossCheck {
            identity,
            direct,
            closed: 0,
        }),
    }
}

/// Computes the profile by direct gcds and verifies the closed forms.
pub fn gcd_profile(t: &AbstractTriple) -> Result<GcdProfile, IdentityError> {
    let n = t.n();
    let index = t.index();
    let n_sq = t.n_squared();
    let sigma_q = t.sigma_q_pow_k(); // 2 n^2 / i
    let sigma_n_sq = t.sigma_n_squared()?; // q^k i

    let e = n;
    let f = n_sq / index;
    let k = gcd(e, f);
    let g = gcd(sigma_q, sigma_n_sq);
    let h = gcd(n_sq, sigma_n_sq);
    let i_gcd = gcd(n, sigma_n_sq);

    // J = H / I must divide exactly.
    if i_gcd == 0 || h % i_gcd != 0 {
        return Err(IdentityError::CrossCheck {
            identity: "J = H/I exact",
            direct: h,
            closed: i_gcd,
        });
    }
    let j = h / i_gcd;

    // Closed forms from the lemma chain; each division must be exact.
    cross_check("G = K^2/F", g, (k * k % f == 0).then(|| k * k / f))?;
    cross_check("I = E*K/F", i_gcd, (e * k % f == 0).then(|| e * k / f))?;
    cross_check("J = E/K", j, (e % k == 0).then(|| e / k))?;
    cross_check("J = I/G", j, (i_gcd % g == 0).then(|| i_gcd / g))?;
    cross_check("H = i", h, Some(index))?;

    Ok(GcdProfile {
        e,
        f,
        k,
        g,
        h,
        i_gcd,
        j,
        index,
    })
}

/// Checks the core identities on an already-built profile:
/// `G*H = I^2`, `G | I`, `I | H`, `H = G*J^2`, `J = I/G = H/I`.
///
/// Useful as a negative control: perturb a field and the relevant verdicts
/// flip.
pub fn verify_core_lemmas(p: &GcdProfile) -> Vec<Verdict> {
    let mut out = Vec::with_capacity(5);
    out.push(Verdict::from_bool(
        "G*H = I^2",
        p.g.checked_mul(p.h) == p.i_gcd.checked_mul(p.i_gcd),
        || format!("{} * {} != {}^2", p.g, p.h, p.i_gcd),
    ));
    out.push(Verdict::from_bool(
        "G divides I",
        p.g != 0 && p.i_gcd % p.g == 0,
        || format!("{} does not divide {}", p.g, p.i_gcd),
    ));
    out.push(Verdict::from_bool(
        "I divides H",
        p.i_gcd != 0 && p.h % p.i_gcd == 0,
        || format!("{} does not divide {}", p.i_gcd, p.h),
    ));
    out.push(Verdict::from_bool(
        "H = G*J^2",
        p.g.checked_mul(p.j).and_then(|gj| gj.checked_mul(p.j)) == Some(p.h),
        || format!("{} != {} * {}^2", p.h, p.g, p.j),
    ));
    out.push(Verdict::from_bool(
        "J = I/G = H/I",
        p.g != 0
            && p.i_gcd != 0
            && p.i_gcd % p.g == 0
            && p.h % p.i_gcd == 0
            && p.i_gcd / p.g == p.j
            && p.h / p.i_gcd == p.j,
        || format!("J = {} differs from I/G or H/I", p.j),
    ));
    out
}

/// The quotient identity behind the value of `J`:
/// `n / gcd(n^2/i, n) = i / gcd(n, i)`, both divisions exact.
pub fn verify_j_formula(t: &AbstractTriple) -> Verdict {
    let n = t.n();
    let index = t.index();
    let f = t.n_squared() / index;
    let k = gcd(f, n);
    let i_gcd = gcd(n, index);
    let lhs_exact = n % k == 0;
    let rhs_exact = index % i_gcd == 0;
    Verdict::from_bool(
        "J = n/gcd(sigma(q^k)/2, n)",
        lhs_exact && rhs_exact && n / k == index / i_gcd,
        || {
            format!(
                "n/gcd(F,n) = {}/{} but i/gcd(n,i) = {}/{}",
                n, k, index, i_gcd
            )
        },
    )
}

/// Result of evaluating a set of conditions claimed equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// Each named condition with its truth value on this input.
    pub conditions: Vec<(&'static str, bool)>,
    /// Passes iff all truth values agree.
    pub verdict: Verdict,
}

impl EquivalenceReport {
    fn build(name: &'static str, conditions: Vec<(&'static str, bool)>) -> Self {
        let first = conditions[0].1;
        let uniform = conditions.iter().all(|&(_, b)| b == first);
        let verdict = Verdict::from_bool(name, uniform, || {
            let rendered: Vec<String> = conditions
                .iter()
                .map(|(label, b)| format!("{label}={b}"))
                .collect();
            rendered.join(", ")
        });
        EquivalenceReport {
            conditions,
            verdict,
        }
    }

    /// The shared truth value (meaningful when the verdict passed).
    pub fn holds(&self) -> bool {
        self.conditions[0].1
    }
}

/// The four-way equivalence: `F | E`, `E | sigma(n^2)`, `G = F`, `I = E`.
pub fn equivalent_conditions_one(t: &AbstractTriple) -> Result<EquivalenceReport, IdentityError> {
    let p = gcd_profile(t)?;
    let sigma_n_sq = t.sigma_n_squared()?;
    Ok(EquivalenceReport::build(
        "F | E <=> E | sigma(n^2) <=> G = F <=> I = E",
        vec![
            ("F divides E", p.e % p.f == 0),
            ("E divides sigma(n^2)", sigma_n_sq % p.e == 0),
            ("G = F", p.g == p.f),
            ("I = E", p.i_gcd == p.e),
        ],
    ))
}

/// The three-way equivalence around `J = 1`: `E | F`, `sigma(n^2) | q^k E`.
pub fn equivalent_conditions_two(t: &AbstractTriple) -> Result<EquivalenceReport, IdentityError> {
    let p = gcd_profile(t)?;
    let sigma_n_sq = t.sigma_n_squared()?;
    let q_pow_k_e = crate::arith::mul_capped(t.q_pow_k()?, p.e)?;
    Ok(EquivalenceReport::build(
        "J = 1 <=> E | F <=> sigma(n^2) | q^k*E",
        vec![
            ("J = 1", p.j == 1),
            ("E divides F", p.f % p.e == 0),
            ("sigma(n^2) divides q^k*E", q_pow_k_e % sigma_n_sq == 0),
        ],
    ))
}

/// The squarefree implications:
///
/// * `H` squarefree implies `J = 1`;
/// * `F` squarefree and `J = 1` together force `F = E` (so `n` squarefree);
/// * the combination `F` squarefree, `J = 1`, `n` *not* squarefree is
///   contradictory and flagged explicitly.
pub fn squarefree_theorems(t: &AbstractTriple) -> Result<Vec<Verdict>, IdentityError> {
    let p = gcd_profile(t)?;
    let h_squarefree = Factorization::of(p.h)?.is_squarefree();
    let f_squarefree = Factorization::of(p.f)?.is_squarefree();
    let n_squarefree = Factorization::of(p.e)?.is_squarefree();

    let mut out = Vec::with_capacity(3);
    out.push(Verdict::from_bool(
        "H squarefree => J = 1",
        !h_squarefree || p.j == 1,
        || format!("H = {} squarefree but J = {}", p.h, p.j),
    ));
    out.push(Verdict::from_bool(
        "F squarefree and J = 1 => F = E",
        !(f_squarefree && p.j == 1) || p.f == p.e,
        || format!("F = {} squarefree, J = 1, E = {}", p.f, p.e),
    ));
    // The square-factor contradiction: the two hypotheses above with a
    // non-squarefree n cannot coexist.
    out.push(Verdict::from_bool(
        "no square-factor contradiction",
        !(f_squarefree && p.j == 1 && !n_squarefree),
        || {
            format!(
                "F = {} squarefree with J = 1 demands n = {} squarefree",
                p.f, p.e
            )
        },
    ));
    Ok(out)
}

/// `K = 1 <=> F = 1`, and when `K >= 3` the cross-multiplied bounds
/// `9 <= G*F <= F^2`, `3E <= I*F <= E*F`, `E <= J*F`, `3J <= E`.
pub fn k_bound_and_corollary(t: &AbstractTriple) -> Result<Vec<Verdict>, IdentityError> {
    let p = gcd_profile(t)?;
    let mut out = Vec::new();
    out.push(Verdict::from_bool(
        "K = 1 <=> F = 1",
        (p.k == 1) == (p.f == 1),
        || format!("K = {}, F = {}", p.k, p.f),
    ));
    if p.k >= 3 {
        let gf = p.g.checked_mul(p.f);
        let ff = p.f.checked_mul(p.f);
        let i_f = p.i_gcd.checked_mul(p.f);
        let ef = p.e.checked_mul(p.f);
        let jf = p.j.checked_mul(p.f);
        out.push(Verdict::from_bool(
            "9 <= G*F <= F^2",
            matches!((gf, ff), (Some(gf), Some(ff)) if 9 <= gf && gf <= ff),
            || format!("G = {}, F = {}", p.g, p.f),
        ));
        out.push(Verdict::from_bool(
            "3E <= I*F <= E*F",
            matches!((i_f, ef), (Some(i_f), Some(ef)) if 3 * p.e <= i_f && i_f <= ef),
            || format!("I = {}, E = {}, F = {}", p.i_gcd, p.e, p.f),
        ));
        out.push(Verdict::from_bool(
            "E <= J*F and 3J <= E",
            matches!(jf, Some(jf) if p.e <= jf && 3 * p.j <= p.e),
            || format!("J = {}, E = {}, F = {}", p.j, p.e, p.f),
        ));
    }
    Ok(out)
}

/// Runs every check in this module on one triple; used by the CLI and the
/// property suite as the "everything holds" predicate.
pub fn verify_all(t: &AbstractTriple) -> Result<Vec<Verdict>, IdentityError> {
    let p = gcd_profile(t)?;
    let mut verdicts = verify_core_lemmas(&p);
    verdicts.push(verify_j_formula(t));
    verdicts.push(equivalent_conditions_one(t)?.verdict);
    verdicts.push(equivalent_conditions_two(t)?.verdict);
    verdicts.extend(squarefree_theorems(t)?);
    verdicts.extend(k_bound_and_corollary(t)?);
    debug_assert!(all_passed(&verdicts));
    Ok(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn descartes() -> AbstractTriple {
        AbstractTriple::new(3003, 819, 22021, 1).unwrap()
    }

    #[test]
    fn descartes_profile_values() {
        let p = gcd_profile(&descartes()).unwrap();
        assert_eq!(p.e, 3003);
        assert_eq!(p.f, 11011);
        assert_eq!(p.k, 1001);
        assert_eq!(p.g, 91);
        assert_eq!(p.h, 819);
        assert_eq!(p.i_gcd, 273);
        assert_eq!(p.j, 3);
        assert_eq!(p.index, 819);
        assert!(!p.g_equals_h());
    }

    #[test]
    fn degenerate_profiles() {
        let p = gcd_profile(&AbstractTriple::new(1, 1, 5, 1).unwrap()).unwrap();
        assert_eq!(
            (p.e, p.f, p.k, p.g, p.h, p.i_gcd, p.j),
            (1, 1, 1, 1, 1, 1, 1)
        );
        assert!(p.g_equals_h());

        // i = n^2 forces F = 1; the closed forms then give G = H = i.
        let p = gcd_profile(&AbstractTriple::new(9, 81, 5, 1).unwrap()).unwrap();
        assert_eq!(p.f, 1);
        assert_eq!(p.k, 1);
        assert_eq!(p.g, 1);
        assert_eq!(p.h, 81);
        assert_eq!(p.i_gcd, 9);
        assert_eq!(p.j, 9);
    }

    #[test]
    fn core_lemmas_pass_and_fail() {
        let p = gcd_profile(&descartes()).unwrap();
        let verdicts = verify_core_lemmas(&p);
        assert!(all_passed(&verdicts), "{verdicts:?}");
        assert_eq!(verdicts.len(), 5);
        // 91 * 819 = 74529 = 273^2.
        assert_eq!(91u128 * 819, 273 * 273);

        // Negative control: perturb G and the product identity fails.
        let mut bad = p;
        bad.g = 92;
        let verdicts = verify_core_lemmas(&bad);
        assert!(!verdicts[0].passed, "G*H = I^2 must fail");
        assert!(verdicts[2].passed, "I | H is untouched");

        let ones = gcd_profile(&AbstractTriple::new(1, 1, 5, 1).unwrap()).unwrap();
        assert!(all_passed(&verify_core_lemmas(&ones)));
    }

    #[test]
    fn j_formula_examples() {
        assert!(verify_j_formula(&descartes()).passed); // 3003/1001 = 819/273 = 3
        assert!(verify_j_formula(&AbstractTriple::new(1, 1, 5, 1).unwrap()).passed);
        assert!(verify_j_formula(&AbstractTriple::new(15, 9, 7, 1).unwrap()).passed);
    }

    #[test]
    fn equivalence_one_examples() {
        // F = 3 divides 9: all four conditions true.
        let r = equivalent_conditions_one(&AbstractTriple::new(9, 27, 5, 1).unwrap()).unwrap();
        assert!(r.verdict.passed);
        assert!(r.holds());

        // Descartes: F = 11011 does not divide 3003, all four false.
        let r = equivalent_conditions_one(&descartes()).unwrap();
        assert!(r.verdict.passed);
        assert!(!r.holds());

        let r = equivalent_conditions_one(&AbstractTriple::new(1, 1, 5, 1).unwrap()).unwrap();
        assert!(r.verdict.passed);
        assert!(r.holds());
    }

    #[test]
    fn equivalence_two_examples() {
        // J = 3/gcd(9,3) = 1 and E = 9 divides F = 27: all true.
        let r = equivalent_conditions_two(&AbstractTriple::new(9, 3, 5, 1).unwrap()).unwrap();
        assert!(r.verdict.passed);
        assert!(r.holds());

        // Descartes: J = 3, all false.
        let r = equivalent_conditions_two(&descartes()).unwrap();
        assert!(r.verdict.passed);
        assert!(!r.holds());

        let r = equivalent_conditions_two(&AbstractTriple::new(1, 1, 5, 1).unwrap()).unwrap();
        assert!(r.verdict.passed);
        assert!(r.holds());
    }

    #[test]
    fn squarefree_examples() {
        // i = 15 squarefree forces J = 1.
        let v = squarefree_theorems(&AbstractTriple::new(15, 15, 7, 1).unwrap()).unwrap();
        assert!(all_passed(&v), "{v:?}");

        // F = 1 squarefree but J = 9 != 1: hypothesis pair false, vacuous.
        let v = squarefree_theorems(&AbstractTriple::new(9, 81, 5, 1).unwrap()).unwrap();
        assert!(all_passed(&v));

        // i = 27 not squarefree, F = 3 squarefree with J = 3: both vacuous.
        let v = squarefree_theorems(&AbstractTriple::new(9, 27, 5, 1).unwrap()).unwrap();
        assert!(all_passed(&v));
    }

    #[test]
    fn k_bound_examples() {
        // Descartes: K = 1001 >= 3, bounds hold.
        let v = k_bound_and_corollary(&descartes()).unwrap();
        assert!(all_passed(&v));
        assert_eq!(v.len(), 4);

        // F = 1 and K = 1: biconditional holds, no bound checks emitted.
        let v = k_bound_and_corollary(&AbstractTriple::new(9, 81, 5, 1).unwrap()).unwrap();
        assert!(all_passed(&v));
        assert_eq!(v.len(), 1);

        // F = 25, K = gcd(15, 25) = 5 >= 3; G = 1 gives 9 <= 25 <= 625.
        let t = AbstractTriple::new(15, 9, 7, 1).unwrap();
        let p = gcd_profile(&t).unwrap();
        assert_eq!((p.f, p.k, p.g), (25, 5, 1));
        assert!(all_passed(&k_bound_and_corollary(&t).unwrap()));
    }

    #[test]
    fn verify_all_bundles_everything() {
        let verdicts = verify_all(&descartes()).unwrap();
        assert!(verdicts.len() >= 12);
        assert!(all_passed(&verdicts));
    }
}
