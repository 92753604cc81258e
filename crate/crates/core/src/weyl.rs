//! Weyl-module computations: weight multiplicities via Freudenthal's
//! recursion, character supports with a dimension-formula cross-check, the
//! contravariant (Shapovalov) pairing of lowering-operator monomials, Gram
//! matrices with elementary divisors, and the strong-linkage bound.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::is_prime;
use crate::error::Error;
use crate::linalg::{smith_normal_form, SmithForm};
use crate::root::{
    build_root_datum, dominant_weights_below, orbit_size, pairing, RootDatum, RootVector, Weight,
};

/// `dim V(λ)_μ`, the weight multiplicity in the Weyl module of highest
/// weight `λ`. `μ` may be any weight; it is Weyl-conjugated internally.
pub fn freudenthal_multiplicity(lambda: &Weight, mu: &Weight) -> Result<BigUint, Error> {
    if *lambda.datum() != *mu.datum() {
        return Err(Error::MismatchedData);
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coeffs().to_vec()));
    }
    let mut memo = HashMap::new();
    Ok(multiplicity(lambda, mu.coeffs(), &mut memo))
}

/// Freudenthal's recursion on dominant representatives:
/// `(|λ+ρ|² − |ν+ρ|²)·m(ν) = 2 Σ_{α>0} Σ_{k≥1} (ν+kα | α)·m(ν+kα)`,
/// seeded by `m(λ) = 1`. The left factor is strictly positive for dominant
/// `ν ≠ λ`, and weight strings are contiguous, so the inner sum stops at the
/// first zero multiplicity.
fn multiplicity(
    lambda: &Weight,
    nu_coeffs: &[i64],
    memo: &mut HashMap<Vec<i64>, BigUint>,
) -> BigUint {
    let datum = lambda.datum();
    let dom = datum.dominant_representative(nu_coeffs);
    if let Some(v) = memo.get(&dom) {
        return v.clone();
    }
    let value = (|| {
        if dom == lambda.coeffs() {
            return BigUint::from(1u32);
        }
        let nu = datum.weight(&dom).expect("conjugate stays in range");
        let in_cone = crate::root::dominance_leq(&nu, lambda)
            .expect("same datum")
            .is_some();
        if !in_cone {
            return BigUint::zero();
        }
        let mut rhs = BigInt::zero();
        for alpha in datum.positive_roots() {
            let alpha_w = datum.root_to_weight(alpha);
            let s_nu_alpha = datum.form_weight_root(&nu, alpha);
            let s_alpha_alpha = datum.form_weight_root(&alpha_w, alpha);
            let mut up = dom.clone();
            for k in 1i128.. {
                for (c, a) in up.iter_mut().zip(alpha_w.coeffs()) {
                    *c += a;
                }
                let m = multiplicity(lambda, &up, memo);
                if m.is_zero() {
                    break;
                }
                rhs += BigInt::from(s_nu_alpha + k * s_alpha_alpha) * BigInt::from(m);
            }
        }
        let two_rho = datum.rho().scaled(2);
        let diff = datum
            .weight_to_root(&lambda.minus(&nu))
            .expect("dominance gave a root-lattice difference");
        let lhs = datum.form_weight_root(&lambda.plus(&nu).plus(&two_rho), &diff);
        assert!(lhs > 0, "strictly positive on dominant ν < λ");
        let (q, r) = (BigInt::from(2) * rhs).div_rem(&BigInt::from(lhs));
        assert!(r.is_zero() && !q.is_negative(), "recursion yields an exact count");
        q.to_biguint().expect("non-negative")
    })();
    memo.insert(dom, value.clone());
    value
}

/// Weyl's dimension formula `∏_{α>0} (λ+ρ|α) / (ρ|α)` as an exact integer.
pub fn weyl_dimension(lambda: &Weight) -> Result<BigUint, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coeffs().to_vec()));
    }
    let datum = lambda.datum();
    let shifted = lambda.plus(&datum.rho());
    let rho = datum.rho();
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for alpha in datum.positive_roots() {
        num *= BigUint::from(datum.form_weight_root(&shifted, alpha) as u128);
        den *= BigUint::from(datum.form_weight_root(&rho, alpha) as u128);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// All dominant weights of `V(λ)` with their multiplicities, plus the total
/// dimension `Σ_μ m(μ)·|W·μ|`, which is checked against the dimension
/// formula.
pub fn weyl_character_support(lambda: &Weight) -> Result<(Vec<(Weight, BigUint)>, BigUint), Error> {
    let mut memo = HashMap::new();
    let mut support = Vec::new();
    let mut total = BigUint::zero();
    for mu in dominant_weights_below(lambda)? {
        let m = multiplicity(lambda, mu.coeffs(), &mut memo);
        if m.is_zero() {
            continue;
        }
        total += &m * orbit_size(&mu)?;
        support.push((mu, m));
    }
    let expected = weyl_dimension(lambda)?;
    if total != expected {
        return Err(Error::Internal(format!(
            "character total {total} disagrees with the dimension formula {expected}"
        )));
    }
    Ok((support, total))
}

/// A product `f_{i_1} ⋯ f_{i_k}` of lowering operators applied to the
/// highest weight vector; indices are 0-based simple-root positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    indices: Vec<usize>,
}

impl Monomial {
    pub fn new(indices: Vec<usize>) -> Self {
        Monomial { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `Σ_j α_{i_j}` in simple-root coordinates.
    pub fn weight_drop(&self, rank: usize) -> RootVector {
        let mut c = vec![0i64; rank];
        for &i in &self.indices {
            c[i] += 1;
        }
        RootVector::new(c)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "v");
        }
        for &i in &self.indices {
            write!(f, "f{} ", i + 1)?;
        }
        write!(f, "v")
    }
}

/// Contravariant form value `(f_I v | f_J v)` in the module of highest
/// weight `λ`, normalized by `(v|v) = 1`.
///
/// Computed by contravariance `(f_i u | w) = (u | e_i w)` and the expansion
/// of `e_i` against a monomial, which picks out each matching `f_i` with the
/// pairing of the weight below it.
pub fn shapovalov_pair(left: &Monomial, right: &Monomial, lambda: &Weight) -> Result<BigInt, Error> {
    let datum = lambda.datum();
    let rank = datum.rank();
    if left.indices.iter().chain(&right.indices).any(|&i| i >= rank) {
        return Err(Error::Domain("monomial index out of range".into()));
    }
    if left.weight_drop(rank) != right.weight_drop(rank) {
        return Ok(BigInt::zero());
    }
    Ok(pair_rec(datum, lambda.coeffs(), &left.indices, &right.indices))
}

fn pair_rec(datum: &RootDatum, lambda: &[i64], left: &[usize], right: &[usize]) -> BigInt {
    let Some((&i, rest_left)) = left.split_first() else {
        debug_assert!(right.is_empty());
        return BigInt::from(1);
    };
    let mut total = BigInt::zero();
    for t in 0..right.len() {
        if right[t] != i {
            continue;
        }
        // ⟨λ − Σ_{s>t} α_{j_s}, α_i^∨⟩
        let mut coeff = lambda[i];
        for &j in &right[t + 1..] {
            coeff -= datum.cartan_entry(j, i);
        }
        if coeff == 0 {
            continue;
        }
        let mut rest_right = right.to_vec();
        rest_right.remove(t);
        total += BigInt::from(coeff) * pair_rec(datum, lambda, rest_left, &rest_right);
    }
    total
}

/// The `n` monomials `v_i = f_i f_{i+1} ⋯ f_n f_{i−1} ⋯ f_1 v` (1-based
/// reading); each drops the weight by `α_1 + ⋯ + α_n`.
pub fn ac_basis_monomials(n: usize) -> Result<Vec<Monomial>, Error> {
    if n < 2 {
        return Err(Error::Domain("the ac basis needs rank n ≥ 2".into()));
    }
    Ok((1..=n)
        .map(|i| Monomial::new((i - 1..n).chain((0..i - 1).rev()).collect()))
        .collect())
}

/// The contravariant Gram matrix of a monomial list on one weight space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Vec<Vec<BigInt>>,
    lambda: Weight,
    mu: Weight,
}

impl GramMatrix {
    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn entries_i64(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|x| i64::try_from(x).expect("entry fits i64")).collect())
            .collect()
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }
}

/// Pairwise contravariant form values. The rational rank must equal the
/// weight multiplicity, so the list is certified to be a basis of
/// `V(λ)_μ`.
pub fn gram_matrix(lambda: &Weight, monomials: &[Monomial]) -> Result<GramMatrix, Error> {
    if monomials.is_empty() {
        return Err(Error::Domain("empty monomial list".into()));
    }
    let datum = lambda.datum();
    let rank = datum.rank();
    let drop = monomials[0].weight_drop(rank);
    if monomials.iter().any(|m| m.weight_drop(rank) != drop) {
        return Err(Error::Domain("monomials lie in different weight spaces".into()));
    }
    let k = monomials.len();
    let mut entries = vec![vec![BigInt::zero(); k]; k];
    for a in 0..k {
        for b in a..k {
            let v = shapovalov_pair(&monomials[a], &monomials[b], lambda)?;
            entries[a][b].clone_from(&v);
            entries[b][a] = v;
        }
    }
    for a in 0..k {
        for b in 0..a {
            debug_assert_eq!(entries[a][b], entries[b][a], "contravariant symmetry");
        }
    }
    let mu = lambda.minus(&datum.root_to_weight(&drop));
    let mult = freudenthal_multiplicity(lambda, &mu)?;
    let rational_rank = smith_normal_form(&entries).rank();
    if BigUint::from(k) != mult || BigUint::from(rational_rank) != mult {
        return Err(Error::Domain(format!(
            "monomial list does not span the weight space: {k} monomials of rank \
             {rational_rank}, multiplicity {mult}"
        )));
    }
    Ok(GramMatrix {
        entries,
        lambda: lambda.clone(),
        mu,
    })
}

pub fn elementary_divisors(g: &GramMatrix) -> SmithForm {
    smith_normal_form(&g.entries)
}

/// `d_{λμ}(ℓ)` for the `ac_n` configuration `λ = ϖ1 + ϖn ⤳ μ = ϖn` in type
/// `B_n`: the corank of the Gram matrix over `F_ℓ`. Sound because `μ` is
/// minuscule, so the simple module `L(μ)` has full weight spaces in every
/// characteristic.
pub fn decomposition_number_ac(n: usize, ell: u64) -> Result<u64, Error> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let (_, gram) = ac_gram_matrix(n)?;
    let corank = elementary_divisors(&gram).count_divisible_by(ell) as u64;
    let indicator = u64::from((2 * n as u64 + 1) % ell == 0);
    if corank != indicator {
        return Err(Error::Internal(format!(
            "ac_{n} corank {corank} at ℓ = {ell} disagrees with the divisibility rule"
        )));
    }
    Ok(corank)
}

/// The `ac_n` highest weight and Gram matrix on its distinguished basis.
pub fn ac_gram_matrix(n: usize) -> Result<(Weight, GramMatrix), Error> {
    if n < 2 {
        return Err(Error::Domain("the ac_n configuration needs n ≥ 2".into()));
    }
    let datum = build_root_datum(&format!("B{n}"))?;
    let mut coeffs = vec![0i64; n];
    coeffs[0] = 1;
    coeffs[n - 1] += 1;
    let lambda = datum.weight(&coeffs)?;
    let gram = gram_matrix(&lambda, &ac_basis_monomials(n)?)?;
    Ok((lambda, gram))
}

/// The strong-linkage divisor `⟨λ+ρ, β^∨⟩ − 1` for `β = λ − μ` a root:
/// every prime with a nonzero decomposition number divides it.
pub fn linkage_bound(lambda: &Weight, mu: &Weight) -> Result<i64, Error> {
    if *lambda.datum() != *mu.datum() {
        return Err(Error::MismatchedData);
    }
    let datum = lambda.datum();
    let beta = datum
        .weight_to_root(&lambda.minus(mu))
        .filter(|b| datum.is_root(b))
        .ok_or(Error::NotARoot)?;
    Ok(pairing(&lambda.plus(&datum.rho()), &beta)? - 1)
}
