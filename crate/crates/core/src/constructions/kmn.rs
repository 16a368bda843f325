//! Signed edge domination of complete bipartite graphs.
//!
//! With `m <= n` (the inputs are swapped otherwise, since `K_{m,n}` and
//! `K_{n,m}` are isomorphic):
//!
//! | parity of (m, n) | `γ'_s(K_{m,n})`          |
//! |------------------|--------------------------|
//! | even, even       | `min(2m, n)`             |
//! | odd, odd         | `min(2m - 1, n)`         |
//! | even, odd        | `min(3m, max(2m, n+1))`  |
//! | odd, even        | `min(3m - 1, max(2m, n))`|
//!
//! Each value is realized by one of ten explicit labelings. Inside this
//! module `u_i` (`1 <= i <= m`) and `v_j` (`1 <= j <= n`) are the 1-based
//! vertices of the normalized orientation; `u_i` is vertex `i - 1` and
//! `v_j` is vertex `m + j - 1` of [`Graph::complete_bipartite`]. Congruences
//! `a ≡ b (mod k)` select every index in the residue class.

use std::fmt;
use std::str::FromStr;

use crate::graph::Graph;
use crate::labeling::EdgeLabeling;

use super::{ConstructionError, Family, Part, PartitionedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityCase {
    EvenEven,
    OddOdd,
    EvenOdd,
    OddEven,
}

impl ParityCase {
    /// Parity class of a normalized pair.
    pub fn of(m: usize, n: usize) -> Self {
        match (m % 2, n % 2) {
            (0, 0) => ParityCase::EvenEven,
            (1, 1) => ParityCase::OddOdd,
            (0, 1) => ParityCase::EvenOdd,
            _ => ParityCase::OddEven,
        }
    }

    pub fn roman(self) -> &'static str {
        match self {
            ParityCase::EvenEven => "i",
            ParityCase::OddOdd => "ii",
            ParityCase::EvenOdd => "iii",
            ParityCase::OddEven => "iv",
        }
    }
}

/// The ten explicit labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionId {
    /// Both even, weight `2m`.
    EvenEvenF,
    /// Both even, weight `n`.
    EvenEvenG,
    /// Both odd, weight `2m - 1`.
    OddOddF,
    /// Both odd, weight `n`; every `Y` vertex has sum exactly 1.
    OddOddG,
    /// `m` even, `n` odd, `n + 1 <= 2m`; weight `2m`.
    EvenOddCase1,
    /// `m` even, `n` odd, `2m < n + 1 <= 3m`; weight `n + 1`.
    EvenOddCase2,
    /// `m` even, `n` odd, `3m < n + 1`; weight `3m`.
    EvenOddCase3,
    /// `m` odd, `n` even, `n <= 2m`; weight `2m`.
    OddEvenCase1,
    /// `m` odd, `n` even, `2m < n <= 3m - 1`; weight `n`.
    OddEvenCase2,
    /// `m` odd, `n` even, `3m - 1 < n`; weight `3m - 1`.
    OddEvenCase3,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 10] = [
        ConstructionId::EvenEvenF,
        ConstructionId::EvenEvenG,
        ConstructionId::OddOddF,
        ConstructionId::OddOddG,
        ConstructionId::EvenOddCase1,
        ConstructionId::EvenOddCase2,
        ConstructionId::EvenOddCase3,
        ConstructionId::OddEvenCase1,
        ConstructionId::OddEvenCase2,
        ConstructionId::OddEvenCase3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstructionId::EvenEvenF => "i-f",
            ConstructionId::EvenEvenG => "i-g",
            ConstructionId::OddOddF => "ii-f",
            ConstructionId::OddOddG => "ii-g",
            ConstructionId::EvenOddCase1 => "iii-case1",
            ConstructionId::EvenOddCase2 => "iii-case2",
            ConstructionId::EvenOddCase3 => "iii-case3",
            ConstructionId::OddEvenCase1 => "iv-case1",
            ConstructionId::OddEvenCase2 => "iv-case2",
            ConstructionId::OddEvenCase3 => "iv-case3",
        }
    }

    pub fn parity(self) -> ParityCase {
        use ConstructionId::*;
        match self {
            EvenEvenF | EvenEvenG => ParityCase::EvenEven,
            OddOddF | OddOddG => ParityCase::OddOdd,
            EvenOddCase1 | EvenOddCase2 | EvenOddCase3 => ParityCase::EvenOdd,
            OddEvenCase1 | OddEvenCase2 | OddEvenCase3 => ParityCase::OddEven,
        }
    }

    /// Weight of the labeling on normalized `K_{m,n}`.
    pub fn weight(self, m: usize, n: usize) -> i64 {
        use ConstructionId::*;
        let (m, n) = (m as i64, n as i64);
        match self {
            EvenEvenF | EvenOddCase1 | OddEvenCase1 => 2 * m,
            EvenEvenG | OddOddG | OddEvenCase2 => n,
            OddOddF => 2 * m - 1,
            EvenOddCase2 => n + 1,
            EvenOddCase3 => 3 * m,
            OddEvenCase3 => 3 * m - 1,
        }
    }

    /// Checks that the labeling is defined on normalized `K_{m,n}`.
    pub fn check_range(self, m: usize, n: usize) -> Result<(), &'static str> {
        use ConstructionId::*;
        if m == 0 || m > n {
            return Err("requires 1 <= m <= n");
        }
        if ParityCase::of(m, n) != self.parity() {
            return Err("parity of (m, n) does not match");
        }
        let ok = match self {
            EvenEvenF | EvenEvenG | OddOddF | OddOddG => true,
            EvenOddCase1 => n < 2 * m,
            EvenOddCase2 => 2 * m < n + 1 && n < 3 * m,
            EvenOddCase3 => 3 * m < n + 1,
            OddEvenCase1 => n <= 2 * m,
            OddEvenCase2 => 2 * m < n && n < 3 * m,
            OddEvenCase3 => 3 * m - 1 < n,
        };
        if ok {
            Ok(())
        } else {
            Err("(m, n) lies outside the sub-case range")
        }
    }

    /// Whether `u_i v_j` is labeled `+1`, for normalized `K_{m,n}`.
    fn positive(self, m: usize, n: usize, i: usize, j: usize) -> bool {
        use ConstructionId::*;
        let odd_sum = (i + j) % 2 == 1;
        match self {
            EvenEvenF | OddOddF => odd_sum || i == j,
            EvenEvenG => odd_sum || (i.is_multiple_of(2) && i % m == j % m),
            OddOddG => odd_odd_g(m, i, j),
            EvenOddCase1 => {
                let (half, y1) = (m / 2, n.div_ceil(2));
                let (in_x1, in_y1) = (i <= half, j <= y1);
                in_x1 != in_y1 || (in_x1 && j == i) || (in_x1 && in_y1 && j % y1 == (i + half) % y1)
            }
            EvenOddCase2 => {
                let (half, y1) = (m / 2, n.div_ceil(2));
                let (in_x1, in_y1) = (i <= half, j <= y1);
                in_x1 != in_y1 || (in_x1 && in_y1 && i % half == j % half)
            }
            EvenOddCase3 => {
                let (half, y) = (m / 2, (n - 3) / 2);
                let block = if j <= y { 1 } else if j <= 2 * y { 2 } else { 3 };
                let in_x1 = i <= half;
                !((in_x1 && block == 1) || (!in_x1 && block == 2))
            }
            OddEvenCase1 | OddEvenCase2 => {
                if j <= m {
                    odd_odd_g(m, i, j)
                } else if n - m <= m {
                    // K_{n-m,m}: the tail of Y is the smaller side.
                    odd_odd_g(n - m, j - m, i)
                } else {
                    odd_odd_g(m, i, j - m)
                }
            }
            OddEvenCase3 => {
                let (x1, y1, y2) = (m.div_ceil(2), (3 * m + 3) / 2, n / 2 - 2);
                let block = if j <= y1 { 1 } else if j <= y1 + y2 { 2 } else { 3 };
                let in_x1 = i <= x1;
                (in_x1 && block == 2)
                    || (!in_x1 && block != 2)
                    || (in_x1 && (3 * i - 2..=3 * i).contains(&j))
            }
        }
    }

    /// Named sub-blocks of `X` and `Y` in the normalized orientation, as
    /// 1-based inclusive index ranges.
    fn sub_blocks(self, m: usize, n: usize) -> Vec<(&'static str, bool, usize, usize)> {
        use ConstructionId::*;
        // (name, is_x, first, last)
        match self {
            EvenOddCase1 | EvenOddCase2 => vec![
                ("X_1", true, 1, m / 2),
                ("X_2", true, m / 2 + 1, m),
                ("Y_1", false, 1, n.div_ceil(2)),
                ("Y_2", false, n.div_ceil(2) + 1, n),
            ],
            EvenOddCase3 => {
                let y = (n - 3) / 2;
                vec![
                    ("X_1", true, 1, m / 2),
                    ("X_2", true, m / 2 + 1, m),
                    ("Y_1", false, 1, y),
                    ("Y_2", false, y + 1, 2 * y),
                    ("Y_3", false, 2 * y + 1, n),
                ]
            }
            OddEvenCase3 => {
                let (x1, y1, y2) = (m.div_ceil(2), (3 * m + 3) / 2, n / 2 - 2);
                vec![
                    ("X_1", true, 1, x1),
                    ("X_2", true, x1 + 1, m),
                    ("Y_1", false, 1, y1),
                    ("Y_2", false, y1 + 1, y1 + y2),
                    ("Y_3", false, y1 + y2 + 1, n),
                ]
            }
            OddEvenCase1 | OddEvenCase2 => vec![
                ("Y_1", false, 1, m),
                ("Y_2", false, m + 1, n),
            ],
            EvenEvenF | EvenEvenG | OddOddF | OddOddG => Vec::new(),
        }
    }
}

/// Odd-odd `g`: `+1` iff `i + j` is odd, or `j` is odd and
/// `i ≡ j (mod m + 1)`. `m` is the size of the side indexed by `i`.
fn odd_odd_g(m: usize, i: usize, j: usize) -> bool {
    (i + j) % 2 == 1 || (j % 2 == 1 && i % (m + 1) == j % (m + 1))
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstructionId {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConstructionId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ConstructionError::UnknownConstruction(s.to_string()))
    }
}

/// Which branch of the closed form is active.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubCase {
    /// `min(2m, n)` / `min(2m-1, n)` attained by the first term.
    FirstTerm,
    /// Attained by `n`.
    SecondTerm,
    Case1,
    Case2,
    Case3,
}

/// Case analysis for one `K_{m,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KmnCase {
    /// Normalized sizes, `m <= n`.
    pub m: usize,
    pub n: usize,
    /// The caller passed the larger part first.
    pub transposed: bool,
    pub parity_case: ParityCase,
    pub sub_case: SubCase,
    pub construction: ConstructionId,
}

fn normalize(m: usize, n: usize) -> (usize, usize, bool) {
    if m <= n {
        (m, n, false)
    } else {
        (n, m, true)
    }
}

/// Classifies `K_{m,n}` and names the labeling that attains `γ'_s`.
pub fn kmn_case(m: usize, n: usize) -> Result<KmnCase, ConstructionError> {
    if m == 0 || n == 0 {
        return Err(ConstructionError::ZeroParameter);
    }
    let (a, b, transposed) = normalize(m, n);
    let parity_case = ParityCase::of(a, b);
    let (sub_case, construction) = match parity_case {
        ParityCase::EvenEven if 2 * a <= b => (SubCase::FirstTerm, ConstructionId::EvenEvenF),
        ParityCase::EvenEven => (SubCase::SecondTerm, ConstructionId::EvenEvenG),
        ParityCase::OddOdd if 2 * a - 1 <= b => (SubCase::FirstTerm, ConstructionId::OddOddF),
        ParityCase::OddOdd => (SubCase::SecondTerm, ConstructionId::OddOddG),
        ParityCase::EvenOdd if b < 2 * a => (SubCase::Case1, ConstructionId::EvenOddCase1),
        ParityCase::EvenOdd if b < 3 * a => (SubCase::Case2, ConstructionId::EvenOddCase2),
        ParityCase::EvenOdd => (SubCase::Case3, ConstructionId::EvenOddCase3),
        ParityCase::OddEven if b <= 2 * a => (SubCase::Case1, ConstructionId::OddEvenCase1),
        ParityCase::OddEven if b < 3 * a => (SubCase::Case2, ConstructionId::OddEvenCase2),
        ParityCase::OddEven => (SubCase::Case3, ConstructionId::OddEvenCase3),
    };
    Ok(KmnCase { m: a, n: b, transposed, parity_case, sub_case, construction })
}

/// Closed form for `γ'_s(K_{m,n})`, `m, n >= 1`. Returns 0 for an empty
/// part (the graph is edgeless).
pub fn kmn_sedn(m: usize, n: usize) -> i64 {
    if m == 0 || n == 0 {
        return 0;
    }
    let (a, b, _) = normalize(m, n);
    let (a, b) = (a as i64, b as i64);
    match ParityCase::of(a as usize, b as usize) {
        ParityCase::EvenEven => (2 * a).min(b),
        ParityCase::OddOdd => (2 * a - 1).min(b),
        ParityCase::EvenOdd => (3 * a).min((2 * a).max(b + 1)),
        ParityCase::OddEven => (3 * a - 1).min((2 * a).max(b)),
    }
}

/// The labeling `id` on `K_{m,n}` in the caller's orientation.
pub fn kmn_construction(m: usize, n: usize, id: ConstructionId) -> Result<EdgeLabeling, ConstructionError> {
    if m == 0 || n == 0 {
        return Err(ConstructionError::ZeroParameter);
    }
    let (a, b, transposed) = normalize(m, n);
    id.check_range(a, b).map_err(|reason| ConstructionError::CaseRangeViolation {
        id: id.to_string(),
        m: a,
        n: b,
        reason,
    })?;
    let g = Graph::complete_bipartite(m, n)?;
    Ok(EdgeLabeling::from_fn(&g, |e| {
        let edge = g.edges()[e];
        // Caller vertex x in 0..m, y in m..m+n.
        let (x, y) = (edge.u + 1, edge.v - m + 1);
        let (i, j) = if transposed { (y, x) } else { (x, y) };
        id.positive(a, b, i, j)
    }))
}

/// An optimal labeling of `K_{m,n}`: SEDF with weight [`kmn_sedn`].
pub fn kmn_witness(m: usize, n: usize) -> Result<EdgeLabeling, ConstructionError> {
    let case = kmn_case(m, n)?;
    kmn_construction(m, n, case.construction)
}

/// `K_{m,n}` with parts `X`, `Y` and the sub-blocks construction `id` uses,
/// in the caller's vertex numbering.
pub fn kmn_partitioned(m: usize, n: usize, id: ConstructionId) -> Result<PartitionedGraph, ConstructionError> {
    if m == 0 || n == 0 {
        return Err(ConstructionError::ZeroParameter);
    }
    let (a, b, transposed) = normalize(m, n);
    let graph = Graph::complete_bipartite(m, n)?;
    // Normalized u_i / v_j to caller vertex.
    let vertex = |is_x: bool, idx: usize| -> usize {
        match (is_x, transposed) {
            (true, false) => idx - 1,
            (false, false) => a + idx - 1,
            (true, true) => m + idx - 1,
            (false, true) => idx - 1,
        }
    };
    let parts = vec![
        Part { name: "X".into(), vertices: (1..=a).map(|i| vertex(true, i)).collect() },
        Part { name: "Y".into(), vertices: (1..=b).map(|j| vertex(false, j)).collect() },
    ];
    let blocks = id
        .sub_blocks(a, b)
        .into_iter()
        .map(|(name, is_x, first, last)| Part {
            name: name.to_string(),
            vertices: (first..=last).map(|k| vertex(is_x, k)).collect(),
        })
        .collect();
    Ok(PartitionedGraph { graph, family: Family::CompleteBipartite { m, n }, parts, blocks })
}
