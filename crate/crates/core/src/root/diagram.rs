//! Recognition of induced subdiagrams.
//!
//! A subset of nodes of a Dynkin diagram spans a diagram of finite type; this
//! module identifies that type and produces a Bourbaki-ordered listing of the
//! ambient nodes. Orientation data (which end of a double bond is short) comes
//! from the ambient symmetrizers, which are comparable within a component.

use std::collections::BTreeSet;

use super::types::{IrreducibleType, Series};
use super::RootDatum;
use crate::error::Error;

/// A connected induced subdiagram together with its Bourbaki relabeling:
/// `order[k]` is the ambient node playing the role of node `k` of `typ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedSubsystem {
    pub typ: IrreducibleType,
    pub order: Vec<usize>,
}

pub fn connected_components(datum: &RootDatum, nodes: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut comps = Vec::new();
    for &start in nodes {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if !comp.insert(i) {
                continue;
            }
            for &j in nodes {
                if j != i && datum.is_adjacent(i, j) && !comp.contains(&j) {
                    stack.push(j);
                }
            }
        }
        seen.extend(comp.iter().copied());
        comps.push(comp);
    }
    comps
}

/// Classifies every connected component of `nodes`; components are returned
/// in order of their smallest ambient node.
pub fn classify_subsystem(
    datum: &RootDatum,
    nodes: &BTreeSet<usize>,
) -> Result<Vec<ClassifiedSubsystem>, Error> {
    connected_components(datum, nodes)
        .iter()
        .map(|comp| classify_connected(datum, comp))
        .collect()
}

/// Classifies one connected node set.
pub fn classify_connected(
    datum: &RootDatum,
    nodes: &BTreeSet<usize>,
) -> Result<ClassifiedSubsystem, Error> {
    let ns: Vec<usize> = nodes.iter().copied().collect();
    let n = ns.len();
    if n == 0 {
        return Err(Error::Internal("classify_connected on empty set".into()));
    }
    let a = |i: usize, j: usize| datum.cartan_entry(i, j);
    let bond = |i: usize, j: usize| a(i, j) * a(j, i);
    let neighbours = |i: usize| -> Vec<usize> {
        ns.iter().copied().filter(|&j| j != i && a(i, j) != 0).collect()
    };
    // larger symmetrizer = shorter root, within a component
    let is_short = |i: usize| {
        let dmax = ns.iter().map(|&k| datum.symmetrizer(k)).max().unwrap();
        let dmin = ns.iter().map(|&k| datum.symmetrizer(k)).min().unwrap();
        dmax != dmin && datum.symmetrizer(i) == dmax
    };

    if n == 1 {
        return Ok(ClassifiedSubsystem {
            typ: IrreducibleType::new(Series::A, 1)?,
            order: ns,
        });
    }

    let max_bond = ns
        .iter()
        .flat_map(|&i| ns.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i != j)
        .map(|(i, j)| bond(i, j))
        .max()
        .unwrap();

    if max_bond >= 2 {
        // B, C, F4 or G2: always a path
        let degrees: Vec<usize> = ns.iter().map(|&i| neighbours(i).len()).collect();
        if degrees.iter().any(|&d| d > 2) {
            return Err(Error::Internal("branched multiply-laced diagram".into()));
        }
        let start = ns[ns.iter().position(|&i| neighbours(i).len() <= 1).unwrap()];
        let mut path = vec![start];
        while path.len() < n {
            let last = *path.last().unwrap();
            let next = neighbours(last)
                .into_iter()
                .find(|j| !path.contains(j))
                .ok_or_else(|| Error::Internal("diagram is not a path".into()))?;
            path.push(next);
        }
        if max_bond == 3 {
            if n != 2 {
                return Err(Error::Internal("triple bond in rank > 2".into()));
            }
            // G2: α_1 short, α_2 long
            if !is_short(path[0]) {
                path.reverse();
            }
            return Ok(ClassifiedSubsystem {
                typ: IrreducibleType::new(Series::G, 2)?,
                order: path,
            });
        }
        let shorts = ns.iter().filter(|&&i| is_short(i)).count();
        let longs = n - shorts;
        if n == 2 || shorts == 1 {
            // rank-2 double bond is B2 by convention: long node first
            if is_short(path[0]) {
                path.reverse();
            }
            if !is_short(path[n - 1]) || bond(path[n - 2], path[n - 1]) != 2 {
                return Err(Error::Internal("malformed B-type path".into()));
            }
            return Ok(ClassifiedSubsystem {
                typ: IrreducibleType::new(Series::B, n)?,
                order: path,
            });
        }
        if longs == 1 {
            if is_short(path[n - 1]) {
                path.reverse();
            }
            if is_short(path[n - 1]) || bond(path[n - 2], path[n - 1]) != 2 {
                return Err(Error::Internal("malformed C-type path".into()));
            }
            return Ok(ClassifiedSubsystem {
                typ: IrreducibleType::new(Series::C, n)?,
                order: path,
            });
        }
        if n == 4 && shorts == 2 {
            if is_short(path[0]) {
                path.reverse();
            }
            let shape_ok = !is_short(path[0])
                && !is_short(path[1])
                && is_short(path[2])
                && is_short(path[3])
                && bond(path[1], path[2]) == 2;
            if !shape_ok {
                return Err(Error::Internal("malformed F4 path".into()));
            }
            return Ok(ClassifiedSubsystem {
                typ: IrreducibleType::new(Series::F, 4)?,
                order: path,
            });
        }
        return Err(Error::Internal("unrecognized multiply-laced diagram".into()));
    }

    // simply laced: A, D or E
    let branch: Vec<usize> = ns
        .iter()
        .copied()
        .filter(|&i| neighbours(i).len() >= 3)
        .collect();
    match branch.len() {
        0 => {
            // path: orient from the smaller-indexed endpoint
            let mut ends: Vec<usize> =
                ns.iter().copied().filter(|&i| neighbours(i).len() <= 1).collect();
            ends.sort_unstable();
            let mut path = vec![ends[0]];
            while path.len() < n {
                let last = *path.last().unwrap();
                let next = neighbours(last).into_iter().find(|j| !path.contains(j)).unwrap();
                path.push(next);
            }
            Ok(ClassifiedSubsystem {
                typ: IrreducibleType::new(Series::A, n)?,
                order: path,
            })
        }
        1 => {
            let b = branch[0];
            if neighbours(b).len() != 3 {
                return Err(Error::Internal("node of degree > 3".into()));
            }
            // walk the three arms outward from the branch node
            let mut arms: Vec<Vec<usize>> = Vec::new();
            for first in neighbours(b) {
                let mut arm = vec![first];
                loop {
                    let last = *arm.last().unwrap();
                    let prev = if arm.len() >= 2 { arm[arm.len() - 2] } else { b };
                    match neighbours(last).into_iter().find(|&j| j != prev && j != b) {
                        Some(next) => arm.push(next),
                        None => break,
                    }
                }
                arms.push(arm);
            }
            arms.sort_by_key(|arm| (arm.len(), arm[0]));
            let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
            match (lens[0], lens[1], lens[2]) {
                (1, 1, _) => {
                    // D_n: long arm tip-to-branch, then the two leaf nodes
                    let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
                    order.push(b);
                    let mut tips = vec![arms[0][0], arms[1][0]];
                    tips.sort_unstable();
                    order.extend(tips);
                    Ok(ClassifiedSubsystem {
                        typ: IrreducibleType::new(Series::D, n)?,
                        order,
                    })
                }
                (1, 2, k) if (2..=4).contains(&k) => {
                    // E_n: α_2 is the length-1 arm, α_1/α_3 the length-2 arm,
                    // the long arm continues α_5 α_6 ...
                    let mut order = vec![arms[1][1], arms[0][0], arms[1][0], b];
                    order.extend(arms[2].iter().copied());
                    Ok(ClassifiedSubsystem {
                        typ: IrreducibleType::new(Series::E, n)?,
                        order,
                    })
                }
                _ => Err(Error::Internal(format!("unrecognized branched diagram {lens:?}"))),
            }
        }
        _ => Err(Error::Internal("more than one branch node".into())),
    }
}
