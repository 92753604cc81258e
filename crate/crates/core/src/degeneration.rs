//! Adjacency in the dominance order on dominant weights.
//!
//! A pair `λ > μ` with no dominant weight strictly between is a *minimal
//! degeneration*. Such pairs fall into exactly five shapes, determined by the
//! difference `β = λ − μ` and its support `I` in the Dynkin diagram:
//!
//! 1. `β` is a simple root;
//! 2. `β` is the short dominant root of `Φ_I` and `μ` vanishes on `I`;
//! 3. `Φ_I` has type `B_n`, `β` is its short dominant root, and `μ`
//!    restricts to the fundamental weight of the unique short simple root;
//! 4. `Φ_I` has type `G2`, `λ_I = ϖ1 + ϖ2`, `μ_I = 2ϖ1`;
//! 5. `Φ_I` has type `G2`, `λ_I = ϖ2`, `μ_I = ϖ1`.
//!
//! In a rank-1 support both clause 1 and clause 2 would describe the same
//! pair (with identical downstream invariants); clause 2 is reserved for
//! `|I| ≥ 2` so that every pair matches exactly one clause.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::Error;
use crate::root::diagram;
use crate::root::{dominance_leq, pairing, IrreducibleType, RootDatum, RootVector, Series, Weight};

/// Support of a non-negative root-lattice vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    pub nodes: BTreeSet<usize>,
    pub connected: bool,
}

pub fn support(datum: &RootDatum, beta: &RootVector) -> Result<Support, Error> {
    if beta.coeffs().len() != datum.rank() {
        return Err(Error::RankMismatch {
            expected: datum.rank(),
            got: beta.coeffs().len(),
        });
    }
    if beta.coeffs().iter().any(|&c| c < 0) {
        return Err(Error::Domain(
            "support is defined for vectors with non-negative coefficients".into(),
        ));
    }
    if beta.is_zero() {
        return Err(Error::ZeroVector);
    }
    let nodes: BTreeSet<usize> = (0..datum.rank()).filter(|&i| beta.coeffs()[i] != 0).collect();
    let connected = diagram::connected_components(datum, &nodes).len() == 1;
    Ok(Support { nodes, connected })
}

/// A standard Levi subsystem: the root datum spanned by a subset of simple
/// roots, with its nodes relabeled in Bourbaki order.
#[derive(Debug, Clone)]
pub struct Levi {
    ambient: Arc<RootDatum>,
    datum: Arc<RootDatum>,
    /// `nodes[k]` = ambient index of Levi node `k`.
    nodes: Vec<usize>,
}

impl Levi {
    pub fn new(ambient: &Arc<RootDatum>, set: &BTreeSet<usize>) -> Result<Levi, Error> {
        if set.is_empty() {
            return Err(Error::Domain("empty Levi subset".into()));
        }
        if set.iter().any(|&i| i >= ambient.rank()) {
            return Err(Error::Domain("node index out of range".into()));
        }
        let parts = diagram::classify_subsystem(ambient, set)?;
        let mut components = Vec::with_capacity(parts.len());
        let mut nodes = Vec::with_capacity(set.len());
        for part in parts {
            components.push(part.typ);
            nodes.extend(part.order);
        }
        let datum = RootDatum::from_components(components);
        for a in 0..nodes.len() {
            for b in 0..nodes.len() {
                debug_assert_eq!(
                    datum.cartan_entry(a, b),
                    ambient.cartan_entry(nodes[a], nodes[b]),
                    "relabeled Cartan block must match the ambient one"
                );
            }
        }
        Ok(Levi {
            ambient: Arc::clone(ambient),
            datum,
            nodes,
        })
    }

    pub fn ambient(&self) -> &Arc<RootDatum> {
        &self.ambient
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn ambient_nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn is_full(&self) -> bool {
        self.nodes.len() == self.ambient.rank()
    }

    /// `λ_I`: the weight with coefficients read off at the Levi's nodes.
    pub fn restrict_weight(&self, w: &Weight) -> Result<Weight, Error> {
        if **w.datum() != *self.ambient {
            return Err(Error::MismatchedData);
        }
        let coeffs: Vec<i64> = self.nodes.iter().map(|&i| w.coeffs()[i]).collect();
        self.datum.weight(&coeffs)
    }

    /// A root-lattice vector supported on the Levi, in Levi coordinates.
    pub fn restrict_root(&self, v: &RootVector) -> Result<RootVector, Error> {
        let mut rest = v.coeffs().to_vec();
        for &i in &self.nodes {
            rest[i] = 0;
        }
        if rest.iter().any(|&c| c != 0) {
            return Err(Error::Domain("vector not supported on the Levi".into()));
        }
        Ok(RootVector::new(
            self.nodes.iter().map(|&i| v.coeffs()[i]).collect(),
        ))
    }

    /// Ambient coordinates of a Levi root-lattice vector.
    pub fn embed_root(&self, v: &RootVector) -> RootVector {
        let mut coeffs = vec![0i64; self.ambient.rank()];
        for (k, &i) in self.nodes.iter().enumerate() {
            coeffs[i] = v.coeffs()[k];
        }
        RootVector::new(coeffs)
    }
}

/// `λ_I` together with the Levi it lives on.
pub fn restrict_to_levi(lambda: &Weight, set: &BTreeSet<usize>) -> Result<(Levi, Weight), Error> {
    let levi = Levi::new(lambda.datum(), set)?;
    let restricted = levi.restrict_weight(lambda)?;
    Ok((levi, restricted))
}

/// The dominant root of minimal length of the (connected) subsystem on `set`,
/// in ambient coordinates. For simply-laced subsystems this is the highest
/// root.
pub fn short_dominant_root(
    datum: &Arc<RootDatum>,
    set: &BTreeSet<usize>,
) -> Result<RootVector, Error> {
    let levi = Levi::new(datum, set)?;
    if levi.datum().components().len() != 1 {
        return Err(Error::DisconnectedSupport);
    }
    let inner = short_dominant_root_full(levi.datum());
    Ok(levi.embed_root(&inner))
}

fn short_dominant_root_full(datum: &Arc<RootDatum>) -> RootVector {
    datum
        .positive_roots()
        .iter()
        .filter(|r| datum.root_to_weight(r).is_dominant())
        .min_by_key(|r| datum.form_root_root(r, r))
        .expect("a connected root system has a dominant root")
        .clone()
}

/// The five shapes a minimal degeneration can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StembridgeCase {
    /// `β` is a simple root.
    Simple,
    /// `β` is the short dominant root of `Φ_I` and `μ_I = 0`, `|I| ≥ 2`.
    ShortDominant,
    /// The type-`B_n` configuration with `μ_I` the short fundamental weight.
    AC(usize),
    /// `G2`, `λ_I = ϖ1 + ϖ2 ⤳ μ_I = 2ϖ1`.
    AG2,
    /// `G2`, `λ_I = ϖ2 ⤳ μ_I = ϖ1`.
    CG2,
}

impl StembridgeCase {
    pub fn label(&self) -> String {
        match self {
            StembridgeCase::Simple => "simple".into(),
            StembridgeCase::ShortDominant => "short_dominant".into(),
            StembridgeCase::AC(n) => format!("ac_{n}"),
            StembridgeCase::AG2 => "ag_2".into(),
            StembridgeCase::CG2 => "cg_2".into(),
        }
    }
}

/// A validated adjacent pair `λ ⤳ μ` of dominant weights.
#[derive(Debug, Clone)]
pub struct MinimalDegeneration {
    lambda: Weight,
    mu: Weight,
    beta: RootVector,
    support: BTreeSet<usize>,
    levi: Levi,
    case: StembridgeCase,
}

impl MinimalDegeneration {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    pub fn beta(&self) -> &RootVector {
        &self.beta
    }

    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    pub fn levi(&self) -> &Levi {
        &self.levi
    }

    pub fn support_type(&self) -> IrreducibleType {
        self.levi.datum().components()[0]
    }

    pub fn case(&self) -> StembridgeCase {
        self.case
    }

    /// `λ_β = ⟨λ, β^∨⟩`; well-defined since `β` is a root in every case.
    pub fn lambda_beta(&self) -> i64 {
        pairing(&self.lambda, &self.beta).expect("β is a root")
    }
}

/// Decides whether `(λ, μ)` is a minimal degeneration and classifies it.
pub fn classify_pair(lambda: &Weight, mu: &Weight) -> Result<Option<MinimalDegeneration>, Error> {
    if *lambda.datum() != *mu.datum() {
        return Err(Error::MismatchedData);
    }
    for w in [lambda, mu] {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.coeffs().to_vec()));
        }
    }
    let datum = lambda.datum();
    let Some(beta) = dominance_leq(mu, lambda)? else {
        return Ok(None);
    };
    if beta.is_zero() {
        return Ok(None);
    }
    let supp = support(datum, &beta)?;
    if !supp.connected {
        return Ok(None);
    }
    let levi = Levi::new(datum, &supp.nodes)?;
    let beta_levi = levi.restrict_root(&beta)?;
    let lambda_i = levi.restrict_weight(lambda)?;
    let mu_i = levi.restrict_weight(mu)?;
    let comp = levi.datum().components()[0];

    let simple = supp.nodes.len() == 1 && beta.coeffs().iter().sum::<i64>() == 1;
    let is_sdr = beta_levi == short_dominant_root_full(levi.datum());
    let short_dom = is_sdr && supp.nodes.len() >= 2 && mu_i.is_zero();
    let ac = is_sdr && comp.series() == Series::B && mu_i == short_fundamental_weight(&levi);
    let is_g2 = comp == IrreducibleType::new(Series::G, 2).unwrap();
    let ag2 =
        is_g2 && lambda_i.coeffs() == [1, 1] && mu_i.coeffs() == [2, 0];
    let cg2 =
        is_g2 && lambda_i.coeffs() == [0, 1] && mu_i.coeffs() == [1, 0];

    let mut matches: Vec<StembridgeCase> = Vec::new();
    if simple {
        matches.push(StembridgeCase::Simple);
    }
    if short_dom {
        matches.push(StembridgeCase::ShortDominant);
    }
    if ac {
        matches.push(StembridgeCase::AC(comp.rank()));
    }
    if ag2 {
        matches.push(StembridgeCase::AG2);
    }
    if cg2 {
        matches.push(StembridgeCase::CG2);
    }
    match matches.as_slice() {
        [] => Ok(None),
        [case] => {
            if matches!(case, StembridgeCase::AG2 | StembridgeCase::CG2) {
                debug_assert_eq!(beta_levi.coeffs(), [1, 1]);
            }
            Ok(Some(MinimalDegeneration {
                lambda: lambda.clone(),
                mu: mu.clone(),
                beta,
                support: supp.nodes,
                levi,
                case: *case,
            }))
        }
        more => Err(Error::Internal(format!(
            "classification clauses are not disjoint: {more:?}"
        ))),
    }
}

/// The fundamental weight (in Levi coordinates) of the unique short simple
/// root of a type-B Levi.
fn short_fundamental_weight(levi: &Levi) -> Weight {
    let datum = levi.datum();
    let d = datum.symmetrizers();
    let dmin = *d.iter().min().expect("nonempty");
    let shorts: Vec<usize> = (0..datum.rank()).filter(|&k| d[k] > dmin).collect();
    assert_eq!(shorts.len(), 1, "type B has exactly one short simple root");
    datum.fundamental_weight(shorts[0])
}

/// All minimal degenerations `λ ⤳ μ`, sorted by `μ`.
///
/// Candidates come from the classification: `β` is either the short dominant
/// root of a connected subdiagram (simple roots being the singleton case) or
/// the sum `α1 + α2` inside a `G2` subdiagram.
pub fn enumerate_minimal_degenerations_below(
    lambda: &Weight,
) -> Result<Vec<MinimalDegeneration>, Error> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coeffs().to_vec()));
    }
    let datum = lambda.datum();
    let mut out = Vec::new();
    for set in connected_subsets(datum) {
        let mut candidates = vec![short_dominant_root(datum, &set)?];
        let levi = Levi::new(datum, &set)?;
        if levi.datum().components()[0] == IrreducibleType::new(Series::G, 2).unwrap() {
            candidates.push(levi.embed_root(&RootVector::new(vec![1, 1])));
        }
        for beta in candidates {
            let mu = lambda.minus(&datum.root_to_weight(&beta));
            if !mu.is_dominant() {
                continue;
            }
            if let Some(d) = classify_pair(lambda, &mu)? {
                out.push(d);
            }
        }
    }
    out.sort_by(|a, b| a.mu.cmp(&b.mu));
    Ok(out)
}

/// Connected subsets of the Dynkin diagram, each within one component.
fn connected_subsets(datum: &RootDatum) -> Vec<BTreeSet<usize>> {
    let mut subsets = Vec::new();
    let mut off = 0;
    for t in datum.components() {
        let m = t.rank();
        assert!(m <= 16, "component rank within bitmask range");
        for mask in 1u32..(1 << m) {
            let set: BTreeSet<usize> =
                (0..m).filter(|&k| mask & (1 << k) != 0).map(|k| off + k).collect();
            if diagram::connected_components(datum, &set).len() == 1 {
                subsets.push(set);
            }
        }
        off += m;
    }
    subsets
}

/// Restricts a degeneration to its support Levi. The reduced pair is again a
/// minimal degeneration of the same case.
pub fn levi_reduce(d: &MinimalDegeneration) -> Result<(Levi, MinimalDegeneration), Error> {
    let levi = d.levi.clone();
    let lambda_i = levi.restrict_weight(&d.lambda)?;
    let mu_i = levi.restrict_weight(&d.mu)?;
    let reduced = classify_pair(&lambda_i, &mu_i)?.ok_or_else(|| {
        Error::Internal("Levi restriction of a minimal degeneration must classify".into())
    })?;
    if reduced.case() != d.case() {
        return Err(Error::Internal(format!(
            "Levi restriction changed the case: {:?} vs {:?}",
            reduced.case(),
            d.case()
        )));
    }
    Ok((levi, reduced))
}
