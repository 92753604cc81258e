//! Irreducible Cartan types and their classical numerical invariants.
//!
//! Conventions are Bourbaki throughout: node numbering, arrow directions, and
//! the Cartan matrix entry `a[i][j] = ⟨α_i, α_j^∨⟩`.

use crate::error::Error;
use num_bigint::BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

/// An irreducible finite type `X_n` with a valid rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleType {
    series: Series,
    rank: usize,
}

impl IrreducibleType {
    /// Valid ranks: `A_n` (n ≥ 1), `B_n` (n ≥ 2), `C_n` (n ≥ 2), `D_n` (n ≥ 3),
    /// `E_6..E_8`, `F_4`, `G_2`.
    pub fn new(series: Series, rank: usize) -> Result<Self, Error> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(Error::Parse(format!(
                "invalid rank {rank} for series {}",
                series.letter()
            )));
        }
        Ok(IrreducibleType { series, rank })
    }

    /// Parses a single label such as `B5` or `E8`.
    pub fn parse(label: &str) -> Result<Self, Error> {
        let mut chars = label.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty type label".into()))?;
        let series = match letter {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => {
                return Err(Error::Parse(format!(
                    "unknown series letter `{letter}` in `{label}`"
                )))
            }
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("malformed rank in `{label}`")));
        }
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("rank out of range in `{label}`")))?;
        IrreducibleType::new(series, rank)
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn label(self) -> String {
        format!("{}{}", self.series.letter(), self.rank)
    }

    /// Langlands dual type: `B_n ↔ C_n`, everything else is self-dual
    /// (for `F_4` and `G_2` duality flips arrows, which relabels nodes but
    /// gives an isomorphic type).
    pub fn dual(self) -> Self {
        let series = match self.series {
            Series::B => Series::C,
            Series::C => Series::B,
            s => s,
        };
        IrreducibleType {
            series,
            rank: self.rank,
        }
    }

    /// Edges of the Dynkin diagram as unordered node pairs, 0-based.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.series {
            Series::A | Series::B | Series::C | Series::F | Series::G => {
                (0..n - 1).map(|i| (i, i + 1)).collect()
            }
            Series::D => {
                // chain α_1..α_{n-2}, with α_{n-1} and α_n attached to α_{n-2}
                let mut e: Vec<_> = (0..n.saturating_sub(3)).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
                e
            }
            Series::E => {
                // chain α_1 α_3 α_4 .. α_n, with α_2 attached to α_4
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Symmetrizers `d_i = 2 / (α_i | α_i)` in the normalization where long
    /// roots have squared length 2. Long nodes get 1, short nodes get the
    /// squared-length ratio, so `diag(d) · cartan` is symmetric.
    pub fn symmetrizers(self) -> Vec<i64> {
        let n = self.rank;
        match self.series {
            Series::A | Series::D | Series::E => vec![1; n],
            Series::B => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                d
            }
            Series::C => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                d
            }
            Series::F => vec![1, 1, 2, 2],
            Series::G => vec![3, 1],
        }
    }

    /// Cartan matrix `a[i][j] = ⟨α_i, α_j^∨⟩ = 2(α_i|α_j)/(α_j|α_j)`.
    pub fn cartan(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let d = self.symmetrizers();
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
        }
        for (i, j) in self.edges() {
            // adjacent simple roots: the longer one pairs to -ratio against
            // the shorter coroot, every other adjacent pairing is -1
            a[i][j] = -std::cmp::max(1, d[j] / d[i]);
            a[j][i] = -std::cmp::max(1, d[i] / d[j]);
        }
        a
    }

    /// Exponents of the Weyl group, ascending.
    pub fn exponents(self) -> Vec<u64> {
        let n = self.rank as u64;
        let mut e: Vec<u64> = match self.series {
            Series::A => (1..=n).collect(),
            Series::B | Series::C => (0..n).map(|k| 2 * k + 1).collect(),
            Series::D => {
                let mut v: Vec<u64> = (0..n - 1).map(|k| 2 * k + 1).collect();
                v.push(n - 1);
                v
            }
            Series::E => match self.rank {
                6 => vec![1, 4, 5, 7, 8, 11],
                7 => vec![1, 5, 7, 9, 11, 13, 17],
                _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
            },
            Series::F => vec![1, 5, 7, 11],
            Series::G => vec![1, 5],
        };
        e.sort_unstable();
        e
    }

    pub fn dual_coxeter_number(self) -> u64 {
        let n = self.rank as u64;
        match self.series {
            Series::A => n + 1,
            Series::B => 2 * n - 1,
            Series::C => n + 1,
            Series::D => 2 * n - 2,
            Series::E => match self.rank {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Series::F => 9,
            Series::G => 4,
        }
    }

    pub fn num_positive_roots(self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match self.rank {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }

    pub fn weyl_order(self) -> BigUint {
        fn factorial(n: usize) -> BigUint {
            (1..=n as u64).map(BigUint::from).product()
        }
        let n = self.rank;
        match self.series {
            Series::A => factorial(n + 1),
            Series::B | Series::C => factorial(n) << n,
            Series::D => factorial(n) << (n - 1),
            Series::E => BigUint::from(match self.rank {
                6 => 51_840u64,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            Series::F => BigUint::from(1152u64),
            Series::G => BigUint::from(12u64),
        }
    }

    /// Bad primes, keyed by the printed label (so `D3` follows the D series).
    pub fn bad_primes(self) -> &'static [u64] {
        match self.series {
            Series::A => &[],
            Series::B | Series::C | Series::D => &[2],
            Series::E => match self.rank {
                8 => &[2, 3, 5],
                _ => &[2, 3],
            },
            Series::F | Series::G => &[2, 3],
        }
    }

    pub fn is_good_prime(self, p: u64) -> bool {
        !self.bad_primes().contains(&p)
    }
}
