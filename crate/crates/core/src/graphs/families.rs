use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Graph, GraphError};

/// The three regular tilings of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tiling {
    /// Triangles; 6-regular, 3-chromatic.
    R3,
    /// Squares; 4-regular, bipartite.
    R4,
    /// Hexagons; 3-regular, bipartite.
    R6,
}

impl Tiling {
    pub fn degree(self) -> usize {
        match self {
            Tiling::R3 => 6,
            Tiling::R4 => 4,
            Tiling::R6 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Tiling::R3 => "r3",
            Tiling::R4 => "r4",
            Tiling::R6 => "r6",
        }
    }
}

/// A member of one of the studied graph families, described by parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyDescriptor {
    Complete(usize),
    /// `K_{1,m}`.
    Star(usize),
    /// `m` triangles sharing one vertex.
    Friendship(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// Edge `xy` with `m1` pendant legs on `x` and `m2` on `y`.
    Caterpillar(usize, usize),
    /// Rooted perfect binary tree of height `d`.
    PerfectBinaryTree(usize),
    /// Complete rooted `m`-ary tree of infinite height (symbolic only).
    MAryTreeInfinite(usize),
    /// Generalized Petersen graph `G(m, j)`.
    Petersen(usize, usize),
    Tiling(Tiling),
    Arbitrary(Graph),
}

impl FamilyDescriptor {
    /// Checks the parameter domain of the family.
    pub fn validate(&self) -> Result<(), GraphError> {
        use FamilyDescriptor::*;
        let bad = |msg: String| Err(GraphError::InvalidParameter(msg));
        match *self {
            Complete(m) | Star(m) | Friendship(m) | Path(m) | MAryTreeInfinite(m) if m < 1 => {
                bad(format!("{}: m must be at least 1", self.family_name()))
            }
            Cycle(m) if m < 3 => bad(format!("cycle: m = {m} must be at least 3")),
            CompleteBipartite(i, j) if i < 1 || j < 1 => bad(format!("complete bipartite: parts {i}, {j} must be nonempty")),
            Caterpillar(a, b) if a < 1 || b < 1 => bad(format!("caterpillar: leg counts {a}, {b} must be at least 1")),
            PerfectBinaryTree(d) if d < 1 => bad(String::from("perfect binary tree: height must be at least 1")),
            PerfectBinaryTree(d) if d >= 32 => bad(format!("perfect binary tree: height {d} too large to build")),
            Petersen(m, j) if m < 3 || j < 1 || 2 * j >= m => {
                bad(format!("petersen: need m >= 3 and 1 <= j < m/2, got m = {m}, j = {j}"))
            }
            _ => Ok(()),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, FamilyDescriptor::MAryTreeInfinite(_) | FamilyDescriptor::Tiling(_))
    }

    pub fn family_name(&self) -> &'static str {
        use FamilyDescriptor::*;
        match self {
            Complete(_) => "complete",
            Star(_) => "star",
            Friendship(_) => "friendship",
            Path(_) => "path",
            Cycle(_) => "cycle",
            CompleteBipartite(..) => "bipartite",
            Caterpillar(..) => "caterpillar",
            PerfectBinaryTree(_) => "binary-tree",
            MAryTreeInfinite(_) => "mary-tree",
            Petersen(..) => "petersen",
            Tiling(_) => "tiling",
            Arbitrary(_) => "graph",
        }
    }

    /// Parameter list as written in the `name:p1,p2` syntax.
    pub fn params(&self) -> String {
        use FamilyDescriptor::*;
        match self {
            Complete(m) | Star(m) | Friendship(m) | Path(m) | Cycle(m) | PerfectBinaryTree(m) | MAryTreeInfinite(m) => {
                format!("{m}")
            }
            CompleteBipartite(a, b) | Caterpillar(a, b) | Petersen(a, b) => format!("{a},{b}"),
            Tiling(t) => String::from(t.name()),
            Arbitrary(g) => format!("{}v{}e", g.vertex_count(), g.edge_count()),
        }
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family_name(), self.params())
    }
}

/// Materializes a finite family member.
///
/// Vertex orders: Star/Friendship put the centre at 0, Friendship triangles
/// are `{0, 2i+1, 2i+2}`; CompleteBipartite lists the `i`-part first;
/// Caterpillar is `x, y`, then the legs of `x`, then the legs of `y`;
/// PerfectBinaryTree is level order from the root (children of `v` are
/// `2v+1`, `2v+2`); Petersen is exterior `v_0..v_{m-1}` then interior
/// `u_0..u_{m-1}`.
pub fn build_family(desc: &FamilyDescriptor) -> Result<Graph, GraphError> {
    use FamilyDescriptor::*;
    desc.validate()?;
    let g = match *desc {
        Complete(m) => Graph::from_edges_unchecked(m, (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect::<Vec<_>>()),
        Star(m) => Graph::from_edges_unchecked(m + 1, (1..=m).map(|v| (0, v))),
        Friendship(m) => Graph::from_edges_unchecked(
            2 * m + 1,
            (0..m).flat_map(|i| [(0, 2 * i + 1), (0, 2 * i + 2), (2 * i + 1, 2 * i + 2)]).collect::<Vec<_>>(),
        ),
        Path(m) => Graph::from_edges_unchecked(m, (1..m).map(|v| (v - 1, v))),
        Cycle(m) => Graph::from_edges_unchecked(m, (0..m).map(|v| (v, (v + 1) % m))),
        CompleteBipartite(i, j) => {
            Graph::from_edges_unchecked(i + j, (0..i).flat_map(|u| (i..i + j).map(move |v| (u, v))).collect::<Vec<_>>())
        }
        Caterpillar(m1, m2) => {
            let edges = core::iter::once((0, 1))
                .chain((0..m1).map(|t| (0, 2 + t)))
                .chain((0..m2).map(|t| (1, 2 + m1 + t)));
            let names = ["x", "y"]
                .into_iter()
                .map(String::from)
                .chain((0..m1).map(|t| format!("x{t}")))
                .chain((0..m2).map(|t| format!("y{t}")))
                .collect();
            Graph::from_edges_unchecked(2 + m1 + m2, edges.collect::<Vec<_>>()).with_names(names)?
        }
        PerfectBinaryTree(d) => {
            let count = (1usize << (d + 1)) - 1;
            Graph::from_edges_unchecked(count, (1..count).map(|v| ((v - 1) / 2, v)))
        }
        Petersen(m, j) => {
            let edges = (0..m).flat_map(|i| [(i, (i + 1) % m), (i, m + i), (m + i, m + (i + j) % m)]);
            let names = (0..m).map(|i| format!("v{i}")).chain((0..m).map(|i| format!("u{i}"))).collect();
            Graph::from_edges_unchecked(2 * m, edges.collect::<Vec<_>>()).with_names(names)?
        }
        Arbitrary(ref g) => g.clone(),
        MAryTreeInfinite(_) | Tiling(_) => return Err(GraphError::NotFinitelyRealizable(desc.family_name())),
    };
    Ok(g)
}
