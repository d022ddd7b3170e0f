//! Automorphisms of premaniplexes and everything built on them: flag orbits,
//! symmetry type graphs, two-orbit classes, orientability, and admissibility
//! of symmetry types.
//!
//! Automorphisms act semiregularly, so each is determined by the image of
//! flag 0 and the whole group has at most `flag_count` elements. The search
//! exploits this twice: a candidate image either extends uniquely by BFS or
//! not at all, and candidates already reachable by known generators can be
//! skipped, so a full enumeration costs only O(log |Γ|) BFS extensions.

use std::collections::VecDeque;

use crate::colors::ColorSet;
use crate::error::{Error, Result};
use crate::mixing::find_covering;
use crate::partition::{OrbitPartition, UnionFind};
use crate::premaniplex::{Flag, Premaniplex, Rooted};

/// A color-preserving graph automorphism, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    image: Vec<Flag>,
}

impl Automorphism {
    pub fn identity(flag_count: usize) -> Self {
        Automorphism {
            image: (0..flag_count).collect(),
        }
    }

    /// Wraps an image array. The caller asserts it is an automorphism;
    /// `commutes_with` re-checks when in doubt.
    pub fn from_image(image: Vec<Flag>) -> Self {
        Automorphism { image }
    }

    pub fn apply(&self, f: Flag) -> Flag {
        self.image[f]
    }

    pub fn image(&self) -> &[Flag] {
        &self.image
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            image: self.image.iter().map(|&f| other.image[f]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut image = vec![0; self.image.len()];
        for (f, &g) in self.image.iter().enumerate() {
            image[g] = f;
        }
        Automorphism { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(f, &g)| f == g)
    }

    /// True when the map commutes with every connection of p (and is thus a
    /// premaniplex automorphism, given that it is a bijection).
    pub fn commutes_with(&self, p: &Premaniplex) -> bool {
        if self.image.len() != p.flag_count() {
            return false;
        }
        (0..p.rank()).all(|i| {
            (0..p.flag_count()).all(|f| self.image[p.adjacent(f, i)] == p.adjacent(self.image[f], i))
        })
    }
}

impl std::fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Automorphism{:?}", self.image)
    }
}

/// Extends `from ↦ to` to a color-preserving map src → dst by BFS; the image
/// of every flag is forced by connectivity. Returns the full image array, or
/// None when no consistent extension exists. Because the image set is closed
/// under all connections and dst is connected, a successful extension is
/// always surjective — and hence bijective when the flag counts agree.
pub(crate) fn extend_map(src: &Premaniplex, dst: &Premaniplex, from: Flag, to: Flag) -> Option<Vec<Flag>> {
    debug_assert_eq!(src.rank(), dst.rank());
    let n = src.rank();
    let mut map = vec![usize::MAX; src.flag_count()];
    map[from] = to;
    let mut queue = VecDeque::new();
    queue.push_back(from);
    while let Some(f) = queue.pop_front() {
        for i in 0..n {
            let g = src.adjacent(f, i);
            let h = dst.adjacent(map[f], i);
            if map[g] == usize::MAX {
                map[g] = h;
                queue.push_back(g);
            } else if map[g] != h {
                return None;
            }
        }
    }
    Some(map)
}

/// A generating set for the full automorphism group, together with the exact
/// flag-orbit partition and the group order. This is the cheap layer: it
/// never materializes the group element list, so it scales to large graphs.
pub struct GeneratingSet {
    pub generators: Vec<Automorphism>,
    pub orbits: OrbitPartition,
    pub group_order: usize,
}

impl GeneratingSet {
    pub fn orbit_count(&self) -> usize {
        self.orbits.block_count()
    }

    pub fn is_regular(&self) -> bool {
        self.orbits.is_single_block()
    }
}

/// Finds generators of the automorphism group by scanning candidate images
/// of flag 0 in ascending order, skipping any candidate already reachable by
/// the generators found so far. Every success strictly enlarges the generated
/// group, so at most log₂|Γ| extensions succeed; the union-find blocks end up
/// being exactly the Γ-orbits, and |Γ| is the size of the orbit of flag 0.
pub fn automorphism_generators(p: &Premaniplex) -> GeneratingSet {
    let m = p.flag_count();
    let base_semi = p.semi_edge_colors(0);
    let mut uf = UnionFind::new(m);
    let mut generators = Vec::new();
    for c in 1..m {
        if uf.same(0, c) || p.semi_edge_colors(c) != base_semi {
            continue;
        }
        if let Some(image) = extend_map(p, p, 0, c) {
            for f in 0..m {
                uf.union(f, image[f]);
            }
            generators.push(Automorphism { image });
        }
    }
    let orbits = uf.into_partition();
    let group_order = orbits.members(orbits.block_of(0)).len();
    GeneratingSet {
        generators,
        orbits,
        group_order,
    }
}

/// The Γ-orbits on flags.
pub fn flag_orbits(p: &Premaniplex) -> OrbitPartition {
    automorphism_generators(p).orbits
}

/// The full automorphism group as an explicit element list. Feasible whenever
/// flag_count is moderate (the group has at most flag_count elements, each of
/// size flag_count); prefer `automorphism_generators` on large graphs.
#[derive(Clone)]
pub struct AutomorphismGroup {
    elements: Vec<Automorphism>,
    orbits: OrbitPartition,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements sorted by the image of flag 0; the identity comes first.
    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn orbits(&self) -> &OrbitPartition {
        &self.orbits
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.block_count()
    }

    pub fn is_regular(&self) -> bool {
        self.orbits.is_single_block()
    }

    pub fn contains(&self, candidate: &Automorphism) -> bool {
        self.element_sending(0, candidate.apply(0))
            .is_some_and(|e| e == candidate)
    }

    /// The unique element with γ(from) = to, if any. Semiregularity makes
    /// the element unique; flags are a faithful index into the group.
    pub fn element_sending(&self, from: Flag, to: Flag) -> Option<&Automorphism> {
        if from == 0 {
            let at = self.elements.partition_point(|e| e.apply(0) < to);
            return self.elements.get(at).filter(|e| e.apply(0) == to);
        }
        self.elements.iter().find(|e| e.apply(from) == to)
    }
}

/// Enumerates the full automorphism group: one BFS extension per member of
/// the orbit of flag 0.
pub fn automorphisms(p: &Premaniplex) -> AutomorphismGroup {
    let gens = automorphism_generators(p);
    let elements = gens
        .orbits
        .members(gens.orbits.block_of(0))
        .iter()
        .map(|&c| Automorphism {
            image: extend_map(p, p, 0, c).expect("every orbit member of flag 0 is a base image"),
        })
        .collect();
    AutomorphismGroup {
        elements,
        orbits: gens.orbits,
    }
}

/// The quotient of p by a subgroup of its automorphism group: one flag per
/// orbit, with the orbit of f joined by color i to the orbit of s_i(f). The
/// subgroup is not trusted: every element must commute with the connections
/// and the list must be closed under composition.
pub fn symmetry_type_graph(p: &Rooted, subgroup: &[Automorphism]) -> Result<Rooted> {
    if subgroup.is_empty() {
        return Err(Error::NotASubgroup);
    }
    for a in subgroup {
        if !a.commutes_with(p.graph()) {
            return Err(Error::NotASubgroup);
        }
    }
    // A nonempty subset of a finite group closed under composition is a
    // subgroup, so closure is the only algebraic check needed.
    let by_base: std::collections::HashMap<Flag, &Automorphism> =
        subgroup.iter().map(|a| (a.apply(0), a)).collect();
    for a in subgroup {
        for b in subgroup {
            let ab = a.then(b);
            match by_base.get(&ab.apply(0)) {
                Some(&known) if *known == ab => {}
                _ => return Err(Error::NotASubgroup),
            }
        }
    }

    let m = p.flag_count();
    let mut uf = UnionFind::new(m);
    for a in subgroup {
        for f in 0..m {
            uf.union(f, a.apply(f));
        }
    }
    let orbits = uf.into_partition();
    Ok(quotient_by_orbits(p, &orbits))
}

/// The symmetry type graph with respect to the full automorphism group,
/// computed without materializing the group.
pub fn full_symmetry_type_graph(p: &Rooted) -> Rooted {
    quotient_by_orbits(p, &flag_orbits(p.graph()))
}

fn quotient_by_orbits(p: &Rooted, orbits: &OrbitPartition) -> Rooted {
    let n = p.rank();
    let rows = (0..n)
        .map(|i| {
            (0..orbits.block_count())
                .map(|b| {
                    let f = orbits.members(b)[0];
                    let target = orbits.block_of(p.adjacent(f, i));
                    debug_assert!(orbits
                        .members(b)
                        .iter()
                        .all(|&g| orbits.block_of(p.adjacent(g, i)) == target));
                    target
                })
                .collect()
        })
        .collect();
    let stg = Premaniplex::new(rows).expect("a quotient by automorphism orbits is a premaniplex");
    Rooted::new(stg, orbits.block_of(p.base())).expect("base orbit is a flag of the quotient")
}

/// How transitive the automorphism group is, with the two-orbit case labeled
/// by its color class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoOrbitClass {
    /// One flag orbit.
    Regular,
    /// Two orbits, in class 2_I: crossing an i-edge stays inside an orbit
    /// exactly for i ∈ I.
    Class(ColorSet),
    /// k > 2 orbits.
    KOrbit(usize),
}

pub fn two_orbit_class(p: &Premaniplex) -> TwoOrbitClass {
    let orbits = flag_orbits(p);
    match orbits.block_count() {
        1 => TwoOrbitClass::Regular,
        2 => {
            let same_orbit = |i: usize| (0..p.flag_count()).all(|f| orbits.same_block(f, p.adjacent(f, i)));
            let class = (0..p.rank()).filter(|&i| same_orbit(i)).fold(ColorSet::empty(), ColorSet::with);
            TwoOrbitClass::Class(class)
        }
        k => TwoOrbitClass::KOrbit(k),
    }
}

/// A 2-coloring of the flags where edges of colors outside I cross the
/// classes and edges (including semi-edges) of colors in I stay — that is, a
/// covering onto the two-flag graph with semi-edges at I. Flag 0 gets color
/// `false`. Returns None when no such coloring exists. When I contains every
/// color the constant coloring works trivially.
pub fn orientation(p: &Premaniplex, colors: ColorSet) -> Option<Vec<bool>> {
    let m = p.flag_count();
    let mut parity = vec![None; m];
    parity[0] = Some(false);
    let mut queue = VecDeque::new();
    queue.push_back(0);
    while let Some(f) = queue.pop_front() {
        let pf = parity[f].unwrap();
        for i in 0..p.rank() {
            let g = p.adjacent(f, i);
            let pg = if colors.contains(i) { pf } else { !pf };
            match parity[g] {
                None => {
                    parity[g] = Some(pg);
                    queue.push_back(g);
                }
                Some(known) if known != pg => return None,
                _ => {}
            }
        }
    }
    Some(parity.into_iter().map(|b| b.unwrap()).collect())
}

pub fn is_orientable(p: &Premaniplex, colors: ColorSet) -> bool {
    orientation(p, colors).is_some()
}

/// The parity-preserving subgroup Γ^I: when p is I-orientable, the elements
/// whose base-flag displacement is I-even (an index-1-or-2 subgroup); when p
/// is not I-orientable, the full group.
pub fn i_even_automorphisms(p: &Premaniplex, colors: ColorSet) -> AutomorphismGroup {
    let full = automorphisms(p);
    let Some(parity) = orientation(p, colors) else {
        return full;
    };
    let elements: Vec<Automorphism> = full
        .elements()
        .iter()
        .filter(|a| parity[a.apply(0)] == parity[0])
        .cloned()
        .collect();
    let m = p.flag_count();
    let mut uf = UnionFind::new(m);
    for a in &elements {
        for f in 0..m {
            uf.union(f, a.apply(f));
        }
    }
    AutomorphismGroup {
        elements,
        orbits: uf.into_partition(),
    }
}

/// True when the symmetry type graph of p (w.r.t. the full group) stays
/// connected after deleting the edges whose colors lie in `colors`;
/// equivalently, Γ(p) acts transitively on chains of that type.
pub fn chain_transitive(p: &Premaniplex, colors: ColorSet) -> bool {
    let orbits = flag_orbits(p);
    let mut uf = UnionFind::new(orbits.block_count());
    for i in 0..p.rank() {
        if colors.contains(i) {
            continue;
        }
        for f in 0..p.flag_count() {
            uf.union(orbits.block_of(f), orbits.block_of(p.adjacent(f, i)));
        }
    }
    uf.into_partition().is_single_block()
}

/// Whether t arises as a symmetry type graph of m (m is "t-admissible"):
/// a base-respecting covering m → t must exist, and the fiber over t's base
/// flag must lie inside the Γ(m)-orbit of m's base flag.
pub fn is_admissible(m: &Rooted, t: &Rooted) -> Result<bool> {
    if m.rank() != t.rank() {
        return Err(Error::RankMismatch(m.rank(), t.rank()));
    }
    let Some(cov) = find_covering(m, t)? else {
        return Ok(false);
    };
    let orbits = flag_orbits(m.graph());
    let base_block = orbits.block_of(m.base());
    Ok((0..m.flag_count()).all(|f| cov.map()[f] != t.base() || orbits.block_of(f) == base_block))
}

/// True when the base-respecting BFS extension a → b is a color-preserving
/// bijection.
pub fn rooted_isomorphic(a: &Rooted, b: &Rooted) -> bool {
    a.rank() == b.rank()
        && a.flag_count() == b.flag_count()
        && extend_map(a.graph(), b.graph(), a.base(), b.base()).is_some()
}
