//! Geometric invariants attached to a minimal degeneration: singularity
//! class, codimension, IC stalk polynomial, the prime-indexed decomposition
//! profile, and the certificates built from them.

use std::fmt;

use crate::arith::{prime_factors, primes_upto};
use crate::degeneration::{MinimalDegeneration, StembridgeCase};
use crate::error::Error;
use crate::root::{
    build_root_datum, weight_lattice_quotient, IrreducibleType, RootDatum, Series,
};

/// What the transverse slice of the degeneration looks like.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularityClass {
    /// The surface singularity `A_m` (`β` a simple root, `m = λ_β − 1`).
    Kleinian(u64),
    /// The minimal nilpotent orbit closure of the given (dual) type.
    Minimal(IrreducibleType),
    /// The quasi-minimal singularity `ac_n`.
    QuasiMinimalAC(usize),
    /// The quasi-minimal singularity `ag_2`.
    QuasiMinimalAG2,
    /// The quasi-minimal singularity `cg_2`.
    QuasiMinimalCG2,
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityClass::Kleinian(m) => write!(f, "Kleinian A{m}"),
            SingularityClass::Minimal(t) => {
                write!(f, "minimal {}", t.label().to_lowercase())
            }
            SingularityClass::QuasiMinimalAC(n) => write!(f, "quasi-minimal ac_{n}"),
            SingularityClass::QuasiMinimalAG2 => write!(f, "quasi-minimal ag_2"),
            SingularityClass::QuasiMinimalCG2 => write!(f, "quasi-minimal cg_2"),
        }
    }
}

/// Stalk polynomial `m_μ(λ, q)`: `coeffs[i]` is the coefficient of `q^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ICPolynomial {
    coeffs: Vec<u64>,
}

impl ICPolynomial {
    pub fn one() -> Self {
        ICPolynomial { coeffs: vec![1] }
    }

    fn from_powers(powers: impl IntoIterator<Item = u64>) -> Self {
        let mut coeffs: Vec<u64> = Vec::new();
        for p in powers {
            let p = p as usize;
            if coeffs.len() <= p {
                coeffs.resize(p + 1, 0);
            }
            coeffs[p] += 1;
        }
        ICPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Value at `q = 1`: the total stalk dimension.
    pub fn eval_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for ICPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}q")?,
                (i, 1) => write!(f, "q^{i}")?,
                (i, c) => write!(f, "{c}q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The function `ℓ ↦ d_{λμ}(ℓ)` on primes, stored as a divisibility
/// condition: `d(ℓ) = #{i : ℓ | N_i}` over the modulus list `N_i`.
/// A list of all ones encodes the identically-zero profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionProfile {
    moduli: Vec<u64>,
}

impl DecompositionProfile {
    pub fn new(moduli: Vec<u64>) -> Self {
        assert!(moduli.iter().all(|&m| m >= 1));
        DecompositionProfile { moduli }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// `d(ℓ)` for a prime `ℓ`.
    pub fn value(&self, ell: u64) -> usize {
        assert!(ell >= 2);
        self.moduli.iter().filter(|&&m| m % ell == 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.moduli.iter().all(|&m| m == 1)
    }

    /// All primes with nonzero value (they divide some modulus).
    pub fn support_primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.moduli.iter().flat_map(|&m| prime_factors(m)).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    pub fn nonzero_primes_upto(&self, bound: u64) -> Vec<u64> {
        primes_upto(bound).into_iter().filter(|&p| self.value(p) != 0).collect()
    }
}

pub fn classify_singularity(d: &MinimalDegeneration) -> SingularityClass {
    match d.case() {
        StembridgeCase::Simple => {
            let m = d.lambda_beta() - 1;
            assert!(m >= 1, "λ_β = μ_β + 2 ≥ 2 on a Kleinian degeneration");
            SingularityClass::Kleinian(m as u64)
        }
        StembridgeCase::ShortDominant => SingularityClass::Minimal(d.support_type().dual()),
        StembridgeCase::AC(n) => SingularityClass::QuasiMinimalAC(n),
        StembridgeCase::AG2 => SingularityClass::QuasiMinimalAG2,
        StembridgeCase::CG2 => SingularityClass::QuasiMinimalCG2,
    }
}

/// Codimension of the smaller stratum: `2⟨β, ρ^∨⟩`, i.e. twice the height of
/// `β`. Cross-checked against the closed form for each case.
pub fn codimension(d: &MinimalDegeneration) -> Result<u64, Error> {
    let actual = 2 * d.beta().height();
    let expected = match d.case() {
        StembridgeCase::Simple => 2,
        StembridgeCase::ShortDominant => {
            2 * d.support_type().dual().dual_coxeter_number() as i64 - 2
        }
        StembridgeCase::AC(n) => 2 * n as i64,
        StembridgeCase::AG2 | StembridgeCase::CG2 => 4,
    };
    if actual != expected {
        return Err(Error::Internal(format!(
            "codimension 2⟨β,ρ∨⟩ = {actual} disagrees with the case table value {expected}"
        )));
    }
    Ok(actual as u64)
}

pub fn ic_polynomial(d: &MinimalDegeneration) -> ICPolynomial {
    match d.case() {
        StembridgeCase::Simple | StembridgeCase::CG2 => ICPolynomial::one(),
        StembridgeCase::AG2 => ICPolynomial::from_powers([0, 1]),
        StembridgeCase::AC(n) => ICPolynomial::from_powers(0..n as u64),
        StembridgeCase::ShortDominant => {
            let levi = d.levi().datum();
            // long simple roots have the minimal symmetrizer; in the
            // simply-laced case every simple root counts as long
            let dmin = *levi.symmetrizers().iter().min().expect("nonempty");
            let t = levi.symmetrizers().iter().filter(|&&x| x == dmin).count();
            let exps = d.support_type().exponents();
            ICPolynomial::from_powers(exps[..t].iter().map(|&e| e - 1))
        }
    }
}

pub fn decomposition_profile(d: &MinimalDegeneration) -> DecompositionProfile {
    let moduli = match d.case() {
        StembridgeCase::Simple => vec![d.lambda_beta() as u64],
        StembridgeCase::AC(n) => vec![2 * n as u64 + 1],
        StembridgeCase::AG2 => vec![7],
        StembridgeCase::CG2 => vec![3],
        StembridgeCase::ShortDominant => {
            let levi = d.levi().datum();
            // simple roots of minimal length = maximal symmetrizer
            let dmax = *levi.symmetrizers().iter().max().expect("nonempty");
            let short: std::collections::BTreeSet<usize> = (0..levi.rank())
                .filter(|&k| levi.symmetrizer(k) == dmax)
                .collect();
            weight_lattice_quotient(levi, &short)
                .expect("nonempty subset")
                .divisors_u64()
        }
    };
    DecompositionProfile::new(moduli)
}

/// Why the degeneration is not smooth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonSmoothnessWitness {
    /// Some modular decomposition number is nonzero at this prime.
    Modular(u64),
    /// The rational IC stalk polynomial differs from 1.
    Rational,
}

pub fn nonsmoothness_certificate(d: &MinimalDegeneration) -> Result<NonSmoothnessWitness, Error> {
    let profile = decomposition_profile(d);
    if let Some(&p) = profile.support_primes().first() {
        return Ok(NonSmoothnessWitness::Modular(p));
    }
    if ic_polynomial(d).is_one() {
        return Err(Error::Internal(
            "degeneration with zero profile and trivial stalk polynomial contradicts the \
             smooth-locus theorem"
                .into(),
        ));
    }
    Ok(NonSmoothnessWitness::Rational)
}

/// The invariant triple used to compare singularities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityInvariants {
    pub class: SingularityClass,
    pub ic: ICPolynomial,
    pub profile: DecompositionProfile,
}

impl SingularityInvariants {
    pub fn of(d: &MinimalDegeneration) -> Result<Self, Error> {
        codimension(d)?;
        Ok(SingularityInvariants {
            class: classify_singularity(d),
            ic: ic_polynomial(d),
            profile: decomposition_profile(d),
        })
    }
}

/// A computable reason two singularities are inequivalent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    /// The rational stalk polynomials differ.
    Rational,
    /// The decomposition profiles differ at this prime.
    Modular(u64),
}

/// Looks for an invariant separating the two; `None` means none of the
/// tracked invariants distinguishes them (not a proof of equivalence).
pub fn equivalence_obstruction(
    a: &SingularityInvariants,
    b: &SingularityInvariants,
) -> Option<Obstruction> {
    if a.ic != b.ic {
        return Some(Obstruction::Rational);
    }
    let mut primes: Vec<u64> = a
        .profile
        .support_primes()
        .into_iter()
        .chain(b.profile.support_primes())
        .collect();
    primes.sort_unstable();
    primes.dedup();
    primes
        .into_iter()
        .find(|&p| a.profile.value(p) != b.profile.value(p))
        .map(Obstruction::Modular)
}

/// Primes `ℓ` for which the minimal nilpotent orbit closure of the given
/// type has `ℓ`-torsion in its integral cohomology (a fixed table; the
/// underlying computation is imported, not reproduced).
pub fn minimal_orbit_torsion_primes(t: IrreducibleType) -> &'static [u64] {
    match t.series() {
        Series::A => &[],
        Series::B | Series::C | Series::D | Series::F => &[2],
        Series::G => &[3],
        Series::E => match t.rank() {
            6 | 7 => &[2, 3],
            _ => &[2, 3, 5],
        },
    }
}

/// The torsion primes all lie among the bad primes of the type.
pub fn conjecture_audit(t: IrreducibleType) -> bool {
    minimal_orbit_torsion_primes(t)
        .iter()
        .all(|p| t.bad_primes().contains(p))
}

/// Named singularities used for comparisons, each realized by an actual
/// degeneration and passed through the full classification pipeline.
pub mod catalog {
    use super::*;
    use std::sync::Arc;

    fn classified(datum: &Arc<RootDatum>, lambda: &[i64], mu: &[i64]) -> MinimalDegeneration {
        let lam = datum.weight(lambda).expect("valid weight");
        let mu = datum.weight(mu).expect("valid weight");
        crate::degeneration::classify_pair(&lam, &mu)
            .expect("valid pair")
            .expect("catalog pair is a minimal degeneration")
    }

    /// Minimal singularity `a_n`: adjoint highest weight degenerating to 0
    /// in type `A_n`.
    pub fn minimal_a(n: usize) -> Result<SingularityInvariants, Error> {
        let datum = build_root_datum(&format!("A{n}"))?;
        let mut lambda = vec![0i64; n];
        if n == 1 {
            lambda[0] = 2;
        } else {
            lambda[0] = 1;
            lambda[n - 1] = 1;
        }
        SingularityInvariants::of(&classified(&datum, &lambda, &vec![0; n]))
    }

    /// Minimal singularity `c_2`: the vector representation degeneration in
    /// type `B2`.
    pub fn minimal_c2() -> Result<SingularityInvariants, Error> {
        let datum = build_root_datum("B2")?;
        SingularityInvariants::of(&classified(&datum, &[1, 0], &[0, 0]))
    }

    /// Minimal singularity `g_2`.
    pub fn minimal_g2() -> Result<SingularityInvariants, Error> {
        let datum = build_root_datum("G2")?;
        SingularityInvariants::of(&classified(&datum, &[1, 0], &[0, 0]))
    }

    /// Quasi-minimal `ac_n`, realized in type `B_n`.
    pub fn quasi_ac(n: usize) -> Result<SingularityInvariants, Error> {
        SingularityInvariants::of(&quasi_ac_degeneration(n)?)
    }

    /// The defining `ac_n` degeneration `(ϖ1 + ϖn, ϖn)` in type `B_n`.
    pub fn quasi_ac_degeneration(n: usize) -> Result<MinimalDegeneration, Error> {
        if n < 2 {
            return Err(Error::Domain("ac_n needs n ≥ 2".into()));
        }
        let datum = build_root_datum(&format!("B{n}"))?;
        let mut lambda = vec![0i64; n];
        lambda[0] = 1;
        lambda[n - 1] = 1;
        let mut mu = vec![0i64; n];
        mu[n - 1] = 1;
        Ok(classified(&datum, &lambda, &mu))
    }

    /// Quasi-minimal `ag_2`.
    pub fn quasi_ag2() -> Result<SingularityInvariants, Error> {
        let datum = build_root_datum("G2")?;
        SingularityInvariants::of(&classified(&datum, &[1, 1], &[2, 0]))
    }

    /// Quasi-minimal `cg_2`.
    pub fn quasi_cg2() -> Result<SingularityInvariants, Error> {
        let datum = build_root_datum("G2")?;
        SingularityInvariants::of(&classified(&datum, &[0, 1], &[1, 0]))
    }

    /// The minimal degeneration of type `E8`: highest root to zero. Its
    /// profile is identically zero, so only the rational witness applies.
    pub fn e8_minimal_degeneration() -> Result<MinimalDegeneration, Error> {
        let datum = build_root_datum("E8")?;
        let mut lambda = vec![0i64; 8];
        lambda[7] = 1;
        let lam = datum.weight(&lambda)?;
        crate::degeneration::classify_pair(&lam, &datum.zero_weight())?
            .ok_or_else(|| Error::Internal("E8 adjoint pair must be minimal".into()))
    }
}
