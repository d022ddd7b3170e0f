use std::sync::Arc;

use crate::colors::ColorSet;
use crate::error::{Error, Result};
use crate::partition::{OrbitPartition, UnionFind};

/// Flags are dense 0-based indices into the connection arrays.
pub type Flag = usize;

/// A connected flag graph with edge colors `0..rank`, one involution per
/// color, where distant colors commute: `(s_i s_j)^2 = id` for `|i-j| > 1`.
/// Semi-edges are fixed points of a connection. Immutable after validation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Premaniplex {
    /// `connections[i][f]` is the flag `i`-adjacent to `f`, written `s_i(f)`.
    connections: Vec<Vec<Flag>>,
}

impl Premaniplex {
    /// Validates shape, involutivity, commutation of distant colors, and
    /// connectivity. Construction is the only way to obtain the type.
    pub fn new(connections: Vec<Vec<Flag>>) -> Result<Self> {
        let rank = connections.len();
        if rank == 0 {
            return Err(Error::Malformed("rank must be at least 1".into()));
        }
        if rank > 32 {
            return Err(Error::Malformed(format!("rank {rank} exceeds the supported maximum of 32")));
        }
        let flag_count = connections[0].len();
        if flag_count == 0 {
            return Err(Error::Malformed("a premaniplex needs at least one flag".into()));
        }
        for (i, row) in connections.iter().enumerate() {
            if row.len() != flag_count {
                return Err(Error::Malformed(format!(
                    "connection row {i} has length {}, expected {flag_count}",
                    row.len()
                )));
            }
            for (f, &g) in row.iter().enumerate() {
                if g >= flag_count {
                    return Err(Error::FlagOutOfRange { flag: g, flag_count });
                }
                let _ = f;
            }
        }
        for (i, row) in connections.iter().enumerate() {
            for f in 0..flag_count {
                if row[row[f]] != f {
                    return Err(Error::NotInvolution { color: i, flag: f });
                }
            }
        }
        for i in 0..rank {
            for j in i + 2..rank {
                for f in 0..flag_count {
                    if connections[i][connections[j][f]] != connections[j][connections[i][f]] {
                        return Err(Error::CommutationFailure { i, j, flag: f });
                    }
                }
            }
        }
        let p = Premaniplex { connections };
        if !p.interval_orbits(ColorSet::full(rank)).is_single_block() {
            return Err(Error::Disconnected);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.connections.len()
    }

    pub fn flag_count(&self) -> usize {
        self.connections[0].len()
    }

    /// `s_i(f)`.
    pub fn adjacent(&self, f: Flag, color: usize) -> Flag {
        self.connections[color][f]
    }

    pub fn connection(&self, color: usize) -> &[Flag] {
        &self.connections[color]
    }

    pub fn connections(&self) -> &[Vec<Flag>] {
        &self.connections
    }

    /// Colors whose connection fixes `f`.
    pub fn semi_edge_colors(&self, f: Flag) -> ColorSet {
        (0..self.rank())
            .filter(|&i| self.connections[i][f] == f)
            .fold(ColorSet::empty(), ColorSet::with)
    }

    /// No semi-edges and no two colors sharing an edge: every `s_i` and every
    /// `s_i s_j` (i ≠ j) is fixed-point-free.
    pub fn is_maniplex(&self) -> bool {
        let n = self.rank();
        let m = self.flag_count();
        for i in 0..n {
            for f in 0..m {
                if self.connections[i][f] == f {
                    return false;
                }
            }
        }
        // s_i s_j has a fixed point iff s_i(f) = s_j(f) for some f.
        for i in 0..n {
            for j in i + 1..n {
                for f in 0..m {
                    if self.connections[i][f] == self.connections[j][f] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Connected components of the subgraph using only the given colors.
    /// Blocks are numbered by smallest contained flag.
    pub fn interval_orbits(&self, colors: ColorSet) -> OrbitPartition {
        let m = self.flag_count();
        let mut uf = UnionFind::new(m);
        for i in colors.iter() {
            if i >= self.rank() {
                break;
            }
            let row = &self.connections[i];
            for f in 0..m {
                uf.union(f, row[f]);
            }
        }
        uf.into_partition()
    }

    /// The i-faces: connected components after deleting the edges of color i.
    pub fn faces(&self, i: usize) -> Vec<Face> {
        let colors = ColorSet::full(self.rank()).without(i);
        self.interval_orbits(colors)
            .blocks()
            .map(|blk| Face {
                rank: i,
                flags: blk.to_vec(),
            })
            .collect()
    }

    /// Reverses the color order: color i becomes n−1−i. An involution.
    pub fn dual(&self) -> Premaniplex {
        let mut connections = self.connections.clone();
        connections.reverse();
        Premaniplex { connections }
    }
}

/// An i-face: one connected component of the flag graph avoiding color i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub rank: usize,
    pub flags: Vec<Flag>,
}

/// A premaniplex with a distinguished base flag. Mixes, coverings, variance
/// groups, and sections all depend materially on the rooting.
#[derive(Clone)]
pub struct Rooted {
    graph: Arc<Premaniplex>,
    base: Flag,
}

impl Rooted {
    pub fn new(p: Premaniplex, base: Flag) -> Result<Self> {
        Self::from_arc(Arc::new(p), base)
    }

    pub fn from_arc(graph: Arc<Premaniplex>, base: Flag) -> Result<Self> {
        if base >= graph.flag_count() {
            return Err(Error::FlagOutOfRange {
                flag: base,
                flag_count: graph.flag_count(),
            });
        }
        Ok(Rooted { graph, base })
    }

    /// Roots at flag 0, the default when no base is given.
    pub fn at_zero(p: Premaniplex) -> Self {
        Rooted {
            graph: Arc::new(p),
            base: 0,
        }
    }

    pub fn base(&self) -> Flag {
        self.base
    }

    pub fn graph(&self) -> &Premaniplex {
        &self.graph
    }

    pub fn graph_arc(&self) -> Arc<Premaniplex> {
        Arc::clone(&self.graph)
    }

    /// Same premaniplex, new base flag. Shares the underlying graph.
    pub fn rebase(&self, f: Flag) -> Result<Rooted> {
        Self::from_arc(Arc::clone(&self.graph), f)
    }

    pub fn dual(&self) -> Rooted {
        Rooted {
            graph: Arc::new(self.graph.dual()),
            base: self.base,
        }
    }

    /// The section under ambient colors `lo..=hi`: the component of the base
    /// flag, re-labeled so section color k is ambient color lo+k. Section
    /// flags are numbered by ascending ambient flag index.
    pub fn section(&self, lo: usize, hi: usize) -> Result<Rooted> {
        Ok(self.section_embedding(lo, hi)?.0)
    }

    /// `section` plus the map from section flag index to ambient flag index.
    pub fn section_embedding(&self, lo: usize, hi: usize) -> Result<(Rooted, Vec<Flag>)> {
        if lo > hi {
            return Err(Error::EmptyInterval);
        }
        if hi >= self.graph.rank() {
            return Err(Error::BadParameter(format!(
                "section interval [{lo},{hi}] exceeds rank {}",
                self.graph.rank()
            )));
        }
        let colors = ColorSet::interval(lo, hi);
        let orbits = self.graph.interval_orbits(colors);
        let members = orbits.members(orbits.block_of(self.base)).to_vec();
        let mut local = vec![usize::MAX; self.graph.flag_count()];
        for (k, &f) in members.iter().enumerate() {
            local[f] = k;
        }
        let connections = (lo..=hi)
            .map(|i| members.iter().map(|&f| local[self.graph.adjacent(f, i)]).collect())
            .collect();
        let section = Premaniplex { connections };
        debug_assert!(section
            .interval_orbits(ColorSet::full(section.rank()))
            .is_single_block());
        let rooted = Rooted {
            graph: Arc::new(section),
            base: local[self.base],
        };
        Ok((rooted, members))
    }

    /// Section under colors [0, n−2].
    pub fn facet(&self) -> Result<Rooted> {
        let n = self.graph.rank();
        if n < 2 {
            return Err(Error::EmptyInterval);
        }
        self.section(0, n - 2)
    }

    /// Section under colors [1, n−1].
    pub fn vertex_figure(&self) -> Result<Rooted> {
        let n = self.graph.rank();
        if n < 2 {
            return Err(Error::EmptyInterval);
        }
        self.section(1, n - 1)
    }

    /// Section under colors [1, n−2].
    pub fn medial_section(&self) -> Result<Rooted> {
        let n = self.graph.rank();
        if n < 3 {
            return Err(Error::EmptyInterval);
        }
        self.section(1, n - 2)
    }

    /// Connection arrays relabeled by BFS discovery order from the base flag
    /// with color order 0..n−1. Two rooted premaniplexes are isomorphic as
    /// rooted objects exactly when their canonical forms are equal.
    pub fn canonical_form(&self) -> Vec<Vec<Flag>> {
        let n = self.graph.rank();
        let m = self.graph.flag_count();
        let mut order = vec![usize::MAX; m];
        let mut queue = std::collections::VecDeque::new();
        order[self.base] = 0;
        queue.push_back(self.base);
        let mut next = 1;
        let mut discovered = vec![self.base];
        while let Some(f) = queue.pop_front() {
            for i in 0..n {
                let g = self.graph.adjacent(f, i);
                if order[g] == usize::MAX {
                    order[g] = next;
                    next += 1;
                    discovered.push(g);
                    queue.push_back(g);
                }
            }
        }
        (0..n)
            .map(|i| {
                discovered
                    .iter()
                    .map(|&f| order[self.graph.adjacent(f, i)])
                    .collect()
            })
            .collect()
    }
}

impl std::ops::Deref for Rooted {
    type Target = Premaniplex;

    fn deref(&self) -> &Premaniplex {
        &self.graph
    }
}

impl std::fmt::Debug for Premaniplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Premaniplex(rank {}, {} flags)", self.rank(), self.flag_count())
    }
}

impl std::fmt::Debug for Rooted {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Rooted(rank {}, {} flags, base {})",
            self.rank(),
            self.flag_count(),
            self.base
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Premaniplex {
        // 8 flags around a 4-gon: s_0 pairs 2k/2k+1, s_1 pairs 2k+1/2k+2.
        Premaniplex::new(vec![
            vec![1, 0, 3, 2, 5, 4, 7, 6],
            vec![7, 2, 1, 4, 3, 6, 5, 0],
        ])
        .unwrap()
    }

    #[test]
    fn rejects_non_involution() {
        let err = Premaniplex::new(vec![vec![1, 2, 0]]).unwrap_err();
        assert!(matches!(err, Error::NotInvolution { color: 0, .. }));
    }

    #[test]
    fn rejects_commutation_failure() {
        // s_0 = (01)(23), s_1 = id, s_2 = (02): s_0 s_2 does not square to id.
        let err = Premaniplex::new(vec![
            vec![1, 0, 3, 2],
            vec![0, 1, 2, 3],
            vec![2, 1, 0, 3],
        ])
        .unwrap_err();
        assert!(matches!(err, Error::CommutationFailure { i: 0, j: 2, .. }));
    }

    #[test]
    fn rejects_disconnected() {
        let err = Premaniplex::new(vec![vec![1, 0, 3, 2]]).unwrap_err();
        assert!(matches!(err, Error::Disconnected));
    }

    #[test]
    fn one_flag_all_semi_edges_is_valid_but_not_maniplex() {
        let p = Premaniplex::new(vec![vec![0], vec![0]]).unwrap();
        assert!(!p.is_maniplex());
        assert_eq!(p.semi_edge_colors(0).len(), 2);
    }

    #[test]
    fn square_is_maniplex_with_four_vertices() {
        let p = square();
        assert!(p.is_maniplex());
        let vertices = p.faces(0);
        assert_eq!(vertices.len(), 4);
        assert!(vertices.iter().all(|f| f.flags.len() == 2));
        let orbits = p.interval_orbits(ColorSet::from_slice(&[0, 1]));
        assert!(orbits.is_single_block());
    }

    #[test]
    fn double_edges_fail_maniplex_check() {
        // Two flags joined by both colors.
        let p = Premaniplex::new(vec![vec![1, 0], vec![1, 0]]).unwrap();
        assert!(!p.is_maniplex());
    }

    #[test]
    fn dual_is_involution() {
        let p = square();
        assert_eq!(p.dual().dual(), p);
        assert_eq!(p.dual().flag_count(), p.flag_count());
    }

    #[test]
    fn orbit_refinement_under_color_subsets() {
        let p = square();
        let fine = p.interval_orbits(ColorSet::single(0));
        let coarse = p.interval_orbits(ColorSet::from_slice(&[0, 1]));
        assert!(fine.refines(&coarse));
    }

    #[test]
    fn full_section_is_identity_relabeling() {
        let r = Rooted::at_zero(square());
        let s = r.section(0, 1).unwrap();
        assert_eq!(s.flag_count(), 8);
        assert_eq!(s.base(), 0);
        assert_eq!(s.canonical_form(), r.canonical_form());
    }

    #[test]
    fn vertex_section_of_square_is_single_zero_edge() {
        let r = Rooted::at_zero(square());
        let s = r.section(0, 0).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.flag_count(), 2);
        assert_eq!(s.base(), 0);
    }

    #[test]
    fn section_preserves_base_and_numbers_by_ambient_index() {
        let r = Rooted::at_zero(square()).rebase(3).unwrap();
        let (s, members) = r.section_embedding(1, 1).unwrap();
        assert_eq!(members, vec![3, 4]);
        assert_eq!(s.base(), 0);
    }

    #[test]
    fn canonical_form_detects_rooted_isomorphism() {
        let a = Rooted::at_zero(square());
        let b = a.rebase(4).unwrap();
        // The square is flag-transitive, so every rooting looks alike.
        assert_eq!(a.canonical_form(), b.canonical_form());
    }
}
