//! Root data, weights and roots.
//!
//! A [`RootDatum`] is a product of irreducible components in Bourbaki
//! numbering. Weights are stored in fundamental-weight coordinates, root
//! vectors in simple-root coordinates, and all pairings go through the
//! W-invariant symmetric form normalized so long roots of each component have
//! squared length 2. Everything is exact: coordinates are machine integers
//! (validated at construction), accumulations run over `i128`, and unbounded
//! quantities (orbit sizes, dimensions) are big integers.

pub mod diagram;
pub mod types;

use std::collections::{BTreeSet, HashSet};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::Error;
use crate::linalg::{smith_normal_form_i64, SmithForm};
pub use types::{IrreducibleType, Series};

/// Weight coordinates are capped so every internal `i64`/`i128` computation
/// is provably overflow-free.
pub const COEFF_BOUND: i64 = 1 << 32;

/// A product of irreducible root systems with simply connected weight lattice.
///
/// `cartan[i][j] = ⟨α_i, α_j^∨⟩`; `symmetrizers[i] = d_i` makes
/// `diag(d)·cartan` symmetric positive definite.
#[derive(Debug)]
pub struct RootDatum {
    components: Vec<IrreducibleType>,
    offsets: Vec<usize>,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    form_scale: i64,
    pos_roots: OnceLock<Vec<RootVector>>,
    root_set: OnceLock<HashSet<Vec<i64>>>,
    // per-component adjugate and determinant of the transposed Cartan block,
    // for exact weight → root conversion
    solve_t: OnceLock<Vec<(Vec<Vec<i64>>, i64)>>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
    }
}
impl Eq for RootDatum {}

/// Builds a root datum from a type spec such as `"B5"` or `"A2xA1"`.
pub fn build_root_datum(spec: &str) -> Result<Arc<RootDatum>, Error> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::Parse("empty type spec".into()));
    }
    let components = spec
        .split('x')
        .map(IrreducibleType::parse)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RootDatum::from_components(components))
}

impl RootDatum {
    pub fn from_components(components: Vec<IrreducibleType>) -> Arc<RootDatum> {
        assert!(!components.is_empty());
        let rank: usize = components.iter().map(|t| t.rank()).sum();
        let mut offsets = Vec::with_capacity(components.len());
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut symmetrizers = Vec::with_capacity(rank);
        let mut off = 0;
        for t in &components {
            offsets.push(off);
            let block = t.cartan();
            for i in 0..t.rank() {
                for j in 0..t.rank() {
                    cartan[off + i][off + j] = block[i][j];
                }
            }
            symmetrizers.extend(t.symmetrizers());
            off += t.rank();
        }
        let form_scale = symmetrizers.iter().fold(1i64, |acc, &d| acc.lcm(&d));
        Arc::new(RootDatum {
            components,
            offsets,
            rank,
            cartan,
            symmetrizers,
            form_scale,
            pos_roots: OnceLock::new(),
            root_set: OnceLock::new(),
            solve_t: OnceLock::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[IrreducibleType] {
        &self.components
    }

    pub fn spec(&self) -> String {
        self.components
            .iter()
            .map(|t| t.label())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn symmetrizer(&self, i: usize) -> i64 {
        self.symmetrizers[i]
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Index of the component containing node `i`, plus the node range of
    /// that component.
    pub fn component_of(&self, i: usize) -> (usize, std::ops::Range<usize>) {
        let k = self
            .offsets
            .iter()
            .rposition(|&off| off <= i)
            .expect("node index in range");
        let end = self.offsets.get(k + 1).copied().unwrap_or(self.rank);
        (k, self.offsets[k]..end)
    }

    pub fn weight(self: &Arc<Self>, coeffs: &[i64]) -> Result<Weight, Error> {
        if coeffs.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| c.abs() > COEFF_BOUND) {
            return Err(Error::Domain(format!(
                "weight coefficients must lie in [-{COEFF_BOUND}, {COEFF_BOUND}]"
            )));
        }
        Ok(Weight {
            datum: Arc::clone(self),
            coeffs: coeffs.to_vec(),
        })
    }

    pub fn zero_weight(self: &Arc<Self>) -> Weight {
        Weight {
            datum: Arc::clone(self),
            coeffs: vec![0; self.rank],
        }
    }

    pub fn fundamental_weight(self: &Arc<Self>, i: usize) -> Weight {
        let mut coeffs = vec![0; self.rank];
        coeffs[i] = 1;
        Weight {
            datum: Arc::clone(self),
            coeffs,
        }
    }

    /// Half the sum of the positive roots: all-ones in weight coordinates.
    pub fn rho(self: &Arc<Self>) -> Weight {
        Weight {
            datum: Arc::clone(self),
            coeffs: vec![1; self.rank],
        }
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut coeffs = vec![0; self.rank];
        coeffs[i] = 1;
        RootVector { coeffs }
    }

    /// `⟨γ, α_i^∨⟩` for a vector in simple-root coordinates.
    pub fn root_pairing_with_simple_coroot(&self, gamma: &RootVector, i: usize) -> i64 {
        gamma
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| c * self.cartan[j][i])
            .sum()
    }

    /// Weight coordinates of a root-lattice vector.
    pub fn root_to_weight(self: &Arc<Self>, gamma: &RootVector) -> Weight {
        let coeffs = (0..self.rank)
            .map(|i| self.root_pairing_with_simple_coroot(gamma, i))
            .collect();
        Weight {
            datum: Arc::clone(self),
            coeffs,
        }
    }

    fn solve_blocks(&self) -> &[(Vec<Vec<i64>>, i64)] {
        self.solve_t.get_or_init(|| {
            self.components
                .iter()
                .zip(&self.offsets)
                .map(|(t, &off)| {
                    let n = t.rank();
                    let block: Vec<Vec<i64>> = (0..n)
                        .map(|i| (0..n).map(|j| self.cartan[off + j][off + i]).collect())
                        .collect();
                    adjugate(&block)
                })
                .collect()
        })
    }

    /// Simple-root coordinates of a weight, if it lies in the root lattice.
    pub fn weight_to_root(&self, w: &Weight) -> Option<RootVector> {
        let mut coeffs = vec![0i64; self.rank];
        for (k, (adj, det)) in self.solve_blocks().iter().enumerate() {
            let off = self.offsets[k];
            let n = adj.len();
            for i in 0..n {
                let num: i128 = (0..n)
                    .map(|j| adj[i][j] as i128 * w.coeffs[off + j] as i128)
                    .sum();
                if num % (*det as i128) != 0 {
                    return None;
                }
                coeffs[off + i] = i64::try_from(num / *det as i128).expect("coordinate in range");
            }
        }
        Some(RootVector { coeffs })
    }

    /// All positive roots in simple-root coordinates, sorted by height and
    /// then lexicographically. Computed once per datum by closing the simple
    /// roots under the simple reflections.
    pub fn positive_roots(&self) -> &[RootVector] {
        self.pos_roots.get_or_init(|| {
            let mut found: HashSet<Vec<i64>> = HashSet::new();
            let mut queue: Vec<Vec<i64>> = Vec::new();
            for i in 0..self.rank {
                let mut c = vec![0i64; self.rank];
                c[i] = 1;
                found.insert(c.clone());
                queue.push(c);
            }
            while let Some(c) = queue.pop() {
                for i in 0..self.rank {
                    let p: i64 = c.iter().enumerate().map(|(j, &cj)| cj * self.cartan[j][i]).sum();
                    let mut refl = c.clone();
                    refl[i] -= p;
                    if refl.iter().all(|&x| x >= 0) && found.insert(refl.clone()) {
                        queue.push(refl);
                    }
                }
            }
            let mut roots: Vec<RootVector> =
                found.into_iter().map(|coeffs| RootVector { coeffs }).collect();
            roots.sort_by_key(|r| (r.height(), r.coeffs.clone()));
            roots
        })
    }

    pub fn is_root(&self, gamma: &RootVector) -> bool {
        let set = self.root_set.get_or_init(|| {
            self.positive_roots()
                .iter()
                .map(|r| r.coeffs.clone())
                .collect()
        });
        if gamma.coeffs.len() != self.rank {
            return false;
        }
        let neg: Vec<i64> = gamma.coeffs.iter().map(|&c| -c).collect();
        set.contains(&gamma.coeffs) || set.contains(&neg)
    }

    /// `S·(λ|γ)` where `S` is [`RootDatum::form_scale`], `λ` a weight and `γ`
    /// a root-lattice vector: `S·Σ_j λ_j c_j / d_j`.
    pub fn form_weight_root(&self, w: &Weight, gamma: &RootVector) -> i128 {
        w.coeffs
            .iter()
            .zip(&gamma.coeffs)
            .zip(&self.symmetrizers)
            .map(|((&wj, &cj), &dj)| wj as i128 * cj as i128 * (self.form_scale / dj) as i128)
            .sum()
    }

    /// `S·(γ|δ)` for root-lattice vectors.
    pub fn form_root_root(self: &Arc<Self>, gamma: &RootVector, delta: &RootVector) -> i128 {
        self.form_weight_root(&self.root_to_weight(gamma), delta)
    }

    /// The denominator that makes `form_weight_root` the exact invariant form.
    pub fn form_scale(&self) -> i64 {
        self.form_scale
    }

    /// `s_i` acting on weight coordinates.
    pub fn reflect_weight(&self, i: usize, coeffs: &mut [i64]) {
        let wi = coeffs[i];
        if wi == 0 {
            return;
        }
        for j in 0..self.rank {
            coeffs[j] -= wi * self.cartan[i][j];
        }
    }

    /// Dominant representative of the Weyl orbit, in weight coordinates.
    pub fn dominant_representative(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut w = coeffs.to_vec();
        loop {
            match (0..self.rank).find(|&i| w[i] < 0) {
                Some(i) => self.reflect_weight(i, &mut w),
                None => return w,
            }
        }
    }
}

fn adjugate(m: &[Vec<i64>]) -> (Vec<Vec<i64>>, i64) {
    let n = m.len();
    let det = det_i64(m, n);
    let det = i64::try_from(det).expect("small determinant");
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            // cofactor expansion: adj[i][j] = (-1)^{i+j} · minor(j, i)
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = sign * i64::try_from(det_i64(&minor, n - 1)).expect("small cofactor");
        }
    }
    (adj, det)
}

/// Fraction-free determinant of the leading `k × k` block (Bareiss).
pub(crate) fn det_i64(m: &[Vec<i64>], k: usize) -> i128 {
    if k == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| m[i][j] as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for p in 0..k - 1 {
        if a[p][p] == 0 {
            match (p + 1..k).find(|&r| a[r][p] != 0) {
                Some(r) => {
                    a.swap(p, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]) / prev;
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    sign * a[k - 1][k - 1]
}

/// A weight in fundamental-weight coordinates, tied to its root datum.
#[derive(Debug, Clone)]
pub struct Weight {
    datum: Arc<RootDatum>,
    coeffs: Vec<i64>,
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        *self.datum == *other.datum && self.coeffs == other.coeffs
    }
}
impl Eq for Weight {}

impl std::hash::Hash for Weight {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.datum.components.hash(state);
        self.coeffs.hash(state);
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Weight {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.datum
            .components
            .cmp(&other.datum.components)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Weight {
    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        assert!(*self.datum == *other.datum, "weights from different data");
        Weight {
            datum: Arc::clone(&self.datum),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn minus(&self, other: &Weight) -> Weight {
        assert!(*self.datum == *other.datum, "weights from different data");
        Weight {
            datum: Arc::clone(&self.datum),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            datum: Arc::clone(&self.datum),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    coeffs: Vec<i64>,
}

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        RootVector { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn plus(&self, other: &RootVector) -> RootVector {
        RootVector {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

/// `⟨λ, γ^∨⟩ = 2(λ|γ)/(γ|γ)` for a root `γ`.
pub fn pairing(lambda: &Weight, gamma: &RootVector) -> Result<i64, Error> {
    let datum = lambda.datum();
    if !datum.is_root(gamma) {
        return Err(Error::NotARoot);
    }
    let num = 2 * datum.form_weight_root(lambda, gamma);
    let den = datum.form_root_root(gamma, gamma);
    if den == 0 || num % den != 0 {
        return Err(Error::Internal(format!(
            "non-integral pairing {num}/{den} on the weight lattice"
        )));
    }
    Ok(i64::try_from(num / den).expect("pairing in range"))
}

/// Tests `μ ≤ λ` in the dominance order; on success returns `λ − μ` in
/// simple-root coordinates.
pub fn dominance_leq(mu: &Weight, lambda: &Weight) -> Result<Option<RootVector>, Error> {
    if **mu.datum() != **lambda.datum() {
        return Err(Error::MismatchedData);
    }
    let diff = lambda.minus(mu);
    Ok(lambda
        .datum()
        .weight_to_root(&diff)
        .filter(|r| r.coeffs.iter().all(|&c| c >= 0)))
}

/// `|W·λ|` for dominant `λ`, via the stabilizer formula
/// `|W| / |W_{I_λ}|` with `I_λ = {i : ⟨λ, α_i^∨⟩ = 0}`.
pub fn orbit_size(lambda: &Weight) -> Result<BigUint, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coeffs().to_vec()));
    }
    let datum = lambda.datum();
    let total: BigUint = datum.components.iter().map(|t| t.weyl_order()).product();
    let zeros: BTreeSet<usize> = (0..datum.rank()).filter(|&i| lambda.coeffs[i] == 0).collect();
    let mut stab = BigUint::from(1u32);
    for part in diagram::classify_subsystem(datum, &zeros)? {
        stab *= part.typ.weyl_order();
    }
    let (q, r) = total.div_rem(&stab);
    debug_assert!(r == BigUint::from(0u32));
    Ok(q)
}

/// Enumerates the full Weyl orbit of a weight. Guarded to orbit sizes of at
/// most 10^6; use [`orbit_size`] for counting.
pub fn weyl_orbit(lambda: &Weight) -> Result<Vec<Weight>, Error> {
    let datum = lambda.datum();
    let dom = datum.dominant_representative(lambda.coeffs());
    let size = orbit_size(&datum.weight(&dom)?)?;
    if size > BigUint::from(1_000_000u32) {
        return Err(Error::Domain(format!("orbit size {size} exceeds the enumeration bound")));
    }
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = vec![dom];
    while let Some(w) = queue.pop() {
        if !seen.insert(w.clone()) {
            continue;
        }
        for i in 0..datum.rank() {
            let mut refl = w.clone();
            datum.reflect_weight(i, &mut refl);
            if !seen.contains(&refl) {
                queue.push(refl);
            }
        }
    }
    debug_assert_eq!(BigUint::from(seen.len()), size);
    let mut orbit: Vec<Vec<i64>> = seen.into_iter().collect();
    orbit.sort_unstable();
    orbit.into_iter().map(|coeffs| datum.weight(&coeffs)).collect()
}

/// All dominant weights `μ ≤ λ`, `λ` included, sorted by coefficient vector.
///
/// `λ − μ = Σ c_i α_i` with `c ≥ 0` coordinatewise, and dominance of `μ`
/// forces `c ≤ A^{-T} λ` (the inverse Cartan matrix has non-negative
/// entries), so the candidates live in a finite box.
pub fn dominant_weights_below(lambda: &Weight) -> Result<Vec<Weight>, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coeffs().to_vec()));
    }
    let datum = lambda.datum();
    let rank = datum.rank();
    let mut bounds = vec![0i64; rank];
    for (k, (adj, det)) in datum.solve_blocks().iter().enumerate() {
        let off = datum.offsets[k];
        let n = adj.len();
        for i in 0..n {
            let num: i128 = (0..n)
                .map(|j| adj[i][j] as i128 * lambda.coeffs[off + j] as i128)
                .sum();
            debug_assert!(num >= 0, "inverse Cartan entries are non-negative");
            bounds[off + i] = i64::try_from(num / *det as i128).expect("bound in range");
        }
    }
    let mut out = Vec::new();
    let mut c = vec![0i64; rank];
    'odometer: loop {
        let mu: Vec<i64> = (0..rank)
            .map(|j| lambda.coeffs[j] - (0..rank).map(|i| c[i] * datum.cartan[i][j]).sum::<i64>())
            .collect();
        if mu.iter().all(|&x| x >= 0) {
            out.push(datum.weight(&mu)?);
        }
        let mut pos = 0;
        loop {
            if pos == rank {
                break 'odometer;
            }
            c[pos] += 1;
            if c[pos] <= bounds[pos] {
                break;
            }
            c[pos] = 0;
            pos += 1;
        }
    }
    out.sort();
    Ok(out)
}

/// The Langlands dual datum: component-wise dual types, rebuilt in Bourbaki
/// presentation (for `B ↔ C` this is exactly the transposed Cartan matrix).
pub fn langlands_dual(datum: &RootDatum) -> Arc<RootDatum> {
    RootDatum::from_components(datum.components.iter().map(|t| t.dual()).collect())
}

/// Elementary divisors of the Cartan matrix of the subsystem spanned by
/// `nodes` — the invariant factors of the weight/root lattice quotient
/// `P(Φ_I)/Q(Φ_I)`.
pub fn weight_lattice_quotient(datum: &RootDatum, nodes: &BTreeSet<usize>) -> Result<SmithForm, Error> {
    if nodes.is_empty() {
        return Err(Error::ZeroVector);
    }
    if nodes.iter().any(|&i| i >= datum.rank()) {
        return Err(Error::Domain("node index out of range".into()));
    }
    let ns: Vec<usize> = nodes.iter().copied().collect();
    let sub: Vec<Vec<i64>> = ns
        .iter()
        .map(|&i| ns.iter().map(|&j| datum.cartan_entry(i, j)).collect())
        .collect();
    Ok(smith_normal_form_i64(&sub))
}
