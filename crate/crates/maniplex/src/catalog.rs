//! Constructors for the premaniplexes used throughout the library and tests:
//! polygons, Coxeter-style regular polytopes, torus maps, two-flag symmetry
//! type graphs, and generic builders from involutions or face lists.

use std::collections::HashMap;

use crate::colors::ColorSet;
use crate::error::{Error, Result};
use crate::premaniplex::{Flag, Premaniplex, Rooted};

/// The p-gon: 2p flags alternating colors 0 and 1 around a cycle.
pub fn polygon(p: usize) -> Result<Rooted> {
    if p < 2 {
        return Err(Error::BadParameter(format!("polygon needs p >= 2, got {p}")));
    }
    let m = 2 * p;
    let mut s0 = vec![0; m];
    let mut s1 = vec![0; m];
    for k in 0..p {
        s0[2 * k] = 2 * k + 1;
        s0[2 * k + 1] = 2 * k;
        s1[2 * k + 1] = (2 * k + 2) % m;
        s1[(2 * k + 2) % m] = 2 * k + 1;
    }
    Ok(Rooted::at_zero(Premaniplex::new(vec![s0, s1])?))
}

/// The two-flag premaniplex with semi-edges exactly at the given colors:
/// s_i swaps the flags for i outside `colors` and fixes both inside. This is
/// the symmetry type graph of every two-orbit premaniplex in class 2_I.
pub fn two_orbit_stg(rank: usize, colors: ColorSet) -> Result<Rooted> {
    if !colors.is_proper(rank) {
        return Err(Error::ImproperColorSet(format!(
            "{colors} is not a proper subset of the colors of rank {rank}"
        )));
    }
    let rows = (0..rank)
        .map(|i| if colors.contains(i) { vec![0, 1] } else { vec![1, 0] })
        .collect();
    Ok(Rooted::at_zero(Premaniplex::new(rows)?))
}

/// One flag, n semi-edges: the symmetry type graph of every regular
/// premaniplex of rank n.
pub fn point(rank: usize) -> Result<Rooted> {
    if rank == 0 {
        return Err(Error::BadParameter("point needs rank >= 1".into()));
    }
    Ok(Rooted::at_zero(Premaniplex::new(vec![vec![0]; rank])?))
}

pub(crate) fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter().all(|&p| {
        if p < perm.len() && !seen[p] {
            seen[p] = true;
            true
        } else {
            false
        }
    })
}

pub(crate) fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&p| f[p]).collect()
}

/// Cayley graph of the group generated by the given involutions, with respect
/// to right multiplication: flags are group elements, s_i(g) = g·x_i, base is
/// the identity. Left multiplication acts as automorphisms, so the result is
/// always regular. It is a maniplex iff the x_i are distinct and nontrivial.
///
/// The generators must satisfy the string relations: each an involution, and
/// (x_i x_j)² = id whenever |i−j| > 1.
pub fn from_involutions(generators: &[Vec<usize>]) -> Result<Rooted> {
    if generators.is_empty() {
        return Err(Error::NotSggi("no generators".into()));
    }
    let k = generators[0].len();
    if k == 0 {
        return Err(Error::NotSggi("generators act on an empty set".into()));
    }
    for (i, x) in generators.iter().enumerate() {
        if x.len() != k || !is_permutation(x) {
            return Err(Error::NotSggi(format!("generator {i} is not a permutation of the point set")));
        }
        if compose(x, x) != (0..k).collect::<Vec<_>>() {
            return Err(Error::NotSggi(format!("generator {i} is not an involution")));
        }
    }
    for i in 0..generators.len() {
        for j in i + 2..generators.len() {
            if compose(&generators[i], &generators[j]) != compose(&generators[j], &generators[i]) {
                return Err(Error::NotSggi(format!("generators {i} and {j} do not commute")));
            }
        }
    }

    let identity: Vec<usize> = (0..k).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut elements: Vec<Vec<usize>> = vec![identity.clone()];
    index.insert(identity, 0);
    let mut connections: Vec<Vec<Flag>> = vec![Vec::new(); generators.len()];
    let mut head = 0;
    while head < elements.len() {
        for (i, x) in generators.iter().enumerate() {
            let g = compose(&elements[head], x);
            let id = *index.entry(g.clone()).or_insert_with(|| {
                elements.push(g);
                elements.len() - 1
            });
            connections[i].push(id);
        }
        head += 1;
    }
    Ok(Rooted::at_zero(Premaniplex::new(connections)?))
}

/// The n-cube {4,3,…,3} via the standard signed-permutation generators.
pub fn cube(n: usize) -> Result<Rooted> {
    if n < 2 {
        return Err(Error::BadParameter(format!("cube needs rank >= 2, got {n}")));
    }
    // Points 0..n are the positive axes, n..2n the negative ones.
    let mut gens = Vec::with_capacity(n);
    let mut x0: Vec<usize> = (0..2 * n).collect();
    x0.swap(0, n);
    gens.push(x0);
    for i in 1..n {
        let mut x: Vec<usize> = (0..2 * n).collect();
        x.swap(i - 1, i);
        x.swap(n + i - 1, n + i);
        gens.push(x);
    }
    from_involutions(&gens)
}

/// The n-simplex {3,…,3} via adjacent transpositions on n+1 points.
pub fn simplex(n: usize) -> Result<Rooted> {
    if n < 2 {
        return Err(Error::BadParameter(format!("simplex needs rank >= 2, got {n}")));
    }
    let gens = (0..n)
        .map(|i| {
            let mut x: Vec<usize> = (0..n + 1).collect();
            x.swap(i, i + 1);
            x
        })
        .collect::<Vec<_>>();
    from_involutions(&gens)
}

/// The torus map {4,4}_(b,c): the square grid modulo the lattice generated by
/// (b,c) and (−c,b). It has 8(b²+c²) flags and is regular iff bc(b−c) = 0;
/// otherwise it is chiral.
pub fn torus_44(b: i64, c: i64) -> Result<Rooted> {
    if b == 0 && c == 0 {
        return Err(Error::BadParameter("torus_44 needs (b,c) != (0,0)".into()));
    }
    let n = b * b + c * c;

    // Canonical representative of (x,y) modulo the lattice: subtract the
    // integer parts of the coordinates in the lattice basis.
    let canon = |x: i64, y: i64| -> (i64, i64) {
        let fa = (x * b + y * c).div_euclid(n);
        let fb = (-x * c + y * b).div_euclid(n);
        (x - fa * b + fb * c, y - fa * c - fb * b)
    };

    let bound = b.abs() + c.abs();
    let mut vertices: Vec<(i64, i64)> = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            let v = canon(x, y);
            if !vertices.contains(&v) {
                vertices.push(v);
            }
        }
    }
    vertices.sort_unstable();
    assert_eq!(vertices.len() as i64, n, "lattice quotient has b²+c² vertices");
    let vertex_index: HashMap<(i64, i64), usize> =
        vertices.iter().copied().enumerate().map(|(i, v)| (v, i)).collect();

    // Flag = (vertex v, direction d of the incident edge, side s of the
    // incident square). Directions 0..4 are E,N,W,S; side 0 is the square
    // counterclockwise of the edge ray, side 1 the clockwise one.
    let m = 8 * n as usize;
    let flag = |v: (i64, i64), d: usize, s: usize| -> Flag {
        let v = canon(v.0, v.1);
        vertex_index[&v] * 8 + d * 2 + s
    };
    let step = |v: (i64, i64), d: usize| -> (i64, i64) {
        match d {
            0 => (v.0 + 1, v.1),
            1 => (v.0, v.1 + 1),
            2 => (v.0 - 1, v.1),
            _ => (v.0, v.1 - 1),
        }
    };

    let mut s0 = vec![0; m];
    let mut s1 = vec![0; m];
    let mut s2 = vec![0; m];
    for (&v, &vi) in &vertex_index {
        for d in 0..4 {
            for s in 0..2 {
                let f = vi * 8 + d * 2 + s;
                s0[f] = flag(step(v, d), (d + 2) % 4, 1 - s);
                s1[f] = if s == 0 {
                    flag(v, (d + 1) % 4, 1)
                } else {
                    flag(v, (d + 3) % 4, 0)
                };
                s2[f] = flag(v, d, 1 - s);
            }
        }
    }
    Ok(Rooted::at_zero(Premaniplex::new(vec![s0, s1, s2])?))
}

/// The ditope over k: rank grows by one, flags double, and the new top color
/// swaps the two copies. Over a polygon this is the dihedron {p,2}.
pub fn ditope(k: &Rooted) -> Rooted {
    let n = k.rank();
    let m = k.flag_count();
    let mut rows: Vec<Vec<Flag>> = (0..n)
        .map(|i| {
            (0..2 * m)
                .map(|f| if f < m { k.adjacent(f, i) } else { k.adjacent(f - m, i) + m })
                .collect()
        })
        .collect();
    rows.push((0..2 * m).map(|f| if f < m { f + m } else { f - m }).collect());
    let p = Premaniplex::new(rows).expect("ditope of a premaniplex is a premaniplex");
    Rooted::new(p, k.base()).expect("base is preserved")
}

/// The medial of a rank-3 premaniplex: vertices become the edges of the
/// input, faces become its faces and vertices. Flags double. The medial of
/// the cube is the cuboctahedron, a two-orbit polyhedron.
pub fn medial(k: &Rooted) -> Result<Rooted> {
    if k.rank() != 3 {
        return Err(Error::BadParameter(format!("medial needs rank 3, got {}", k.rank())));
    }
    let m = k.flag_count();
    // Flag (f, t): t = 0 sits in the face-side copy, t = 1 in the vertex-side
    // copy; the new 2-color swaps the copies.
    let s0: Vec<Flag> = (0..2 * m)
        .map(|ft| {
            let (f, t) = (ft % m, ft / m);
            k.adjacent(f, 1) + t * m
        })
        .collect();
    let s1: Vec<Flag> = (0..2 * m)
        .map(|ft| {
            let (f, t) = (ft % m, ft / m);
            if t == 0 {
                k.adjacent(f, 0)
            } else {
                k.adjacent(f, 2) + m
            }
        })
        .collect();
    let s2: Vec<Flag> = (0..2 * m).map(|ft| (ft + m) % (2 * m)).collect();
    let p = Premaniplex::new(vec![s0, s1, s2])?;
    Ok(Rooted::new(p, k.base())?)
}

/// Builds the flag graph of a map on a closed surface from its faces, given
/// as cyclic vertex lists. Every undirected vertex pair may bound at most one
/// edge, and that edge must lie on exactly two face sides.
pub fn map_from_faces(faces: &[Vec<usize>]) -> Result<Rooted> {
    // Slot (face, j) is the boundary edge from faces[face][j] to the next
    // vertex; a flag is a slot plus one of its two ends.
    let mut offsets = Vec::with_capacity(faces.len());
    let mut total = 0;
    for (fi, face) in faces.iter().enumerate() {
        if face.len() < 2 {
            return Err(Error::Malformed(format!("face {fi} has fewer than 2 vertices")));
        }
        for j in 0..face.len() {
            if face[j] == face[(j + 1) % face.len()] {
                return Err(Error::Malformed(format!("face {fi} repeats a vertex consecutively")));
            }
        }
        offsets.push(total);
        total += 2 * face.len();
    }
    let flag_of = |fi: usize, j: usize, end: usize| offsets[fi] + 2 * j + end;

    let mut edge_slots: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for (fi, face) in faces.iter().enumerate() {
        for j in 0..face.len() {
            let (a, b) = (face[j], face[(j + 1) % face.len()]);
            let key = (a.min(b), a.max(b));
            edge_slots.entry(key).or_default().push((fi, j));
        }
    }

    let mut s0 = vec![0; total];
    let mut s1 = vec![0; total];
    let mut s2 = vec![0; total];
    for (fi, face) in faces.iter().enumerate() {
        let k = face.len();
        for j in 0..k {
            s0[flag_of(fi, j, 0)] = flag_of(fi, j, 1);
            s0[flag_of(fi, j, 1)] = flag_of(fi, j, 0);
            // Vertex face[j] is the 0-end of slot j and the 1-end of slot j−1.
            s1[flag_of(fi, j, 0)] = flag_of(fi, (j + k - 1) % k, 1);
            s1[flag_of(fi, (j + k - 1) % k, 1)] = flag_of(fi, j, 0);
        }
    }
    for ((a, b), slots) in &edge_slots {
        if slots.len() != 2 {
            return Err(Error::Malformed(format!(
                "edge {{{a},{b}}} lies on {} face sides, expected 2",
                slots.len()
            )));
        }
        let (f1, j1) = slots[0];
        let (f2, j2) = slots[1];
        for end1 in 0..2 {
            let v = if end1 == 0 { faces[f1][j1] } else { faces[f1][(j1 + 1) % faces[f1].len()] };
            let end2 = if faces[f2][j2] == v { 0 } else { 1 };
            s2[flag_of(f1, j1, end1)] = flag_of(f2, j2, end2);
            s2[flag_of(f2, j2, end2)] = flag_of(f1, j1, end1);
        }
    }
    Ok(Rooted::at_zero(Premaniplex::new(vec![s0, s1, s2])?))
}

/// The p-gonal prism, a three-orbit polyhedron for p ≠ 4.
pub fn prism(p: usize) -> Result<Rooted> {
    if p < 3 {
        return Err(Error::BadParameter(format!("prism needs p >= 3, got {p}")));
    }
    // Vertices 0..p are the bottom ring, p..2p the top ring.
    let mut faces = Vec::with_capacity(p + 2);
    faces.push((0..p).collect::<Vec<_>>());
    faces.push((p..2 * p).collect::<Vec<_>>());
    for k in 0..p {
        let k1 = (k + 1) % p;
        faces.push(vec![k, k1, p + k1, p + k]);
    }
    map_from_faces(&faces)
}

/// Two rank-4, three-flag premaniplexes with trivial automorphism group.
/// Each stays connected after deleting colors 0 and 3, but their mix does
/// not: chain-transitivity is not preserved by mixing.
pub fn three_orbit_pair() -> (Rooted, Rooted) {
    // First: a path with a color-1 edge then a color-2 edge.
    let a = Premaniplex::new(vec![
        vec![0, 1, 2],
        vec![1, 0, 2],
        vec![0, 2, 1],
        vec![0, 1, 2],
    ])
    .expect("valid by construction");
    // Second: a color-2 edge then a double edge of colors 1 and 3.
    let b = Premaniplex::new(vec![
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![0, 2, 1],
    ])
    .expect("valid by construction");
    (Rooted::at_zero(a), Rooted::at_zero(b))
}
