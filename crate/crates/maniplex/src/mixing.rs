//! Coverings between rooted premaniplexes and the mix — the fiber-product
//! component of the base pair — plus its derived constructions: iterated
//! mixes, orientation doubles, and smallest regular covers.

use std::collections::HashMap;

use crate::catalog::two_orbit_stg;
use crate::colors::ColorSet;
use crate::error::{Error, Result};
use crate::premaniplex::{Flag, Premaniplex, Rooted};
use crate::symmetry::{automorphism_generators, extend_map};

/// A color-preserving surjection source → target taking base flag to base
/// flag. Such a map is determined by the image of any single flag.
#[derive(Clone)]
pub struct Covering {
    source: Rooted,
    target: Rooted,
    map: Vec<Flag>,
}

impl Covering {
    /// Wraps and fully validates a covering map.
    pub fn new(source: Rooted, target: Rooted, map: Vec<Flag>) -> Result<Covering> {
        let cov = Covering { source, target, map };
        if !cov.is_valid() {
            return Err(Error::Malformed("not a base-respecting covering".into()));
        }
        Ok(cov)
    }

    pub fn source(&self) -> &Rooted {
        &self.source
    }

    pub fn target(&self) -> &Rooted {
        &self.target
    }

    pub fn map(&self) -> &[Flag] {
        &self.map
    }

    pub fn apply(&self, f: Flag) -> Flag {
        self.map[f]
    }

    pub fn is_valid(&self) -> bool {
        let (s, t) = (self.source.graph(), self.target.graph());
        if s.rank() != t.rank() || self.map.len() != s.flag_count() {
            return false;
        }
        if self.map[self.source.base()] != self.target.base() {
            return false;
        }
        let commutes = (0..s.rank())
            .all(|i| (0..s.flag_count()).all(|f| self.map[s.adjacent(f, i)] == t.adjacent(self.map[f], i)));
        if !commutes {
            return false;
        }
        let mut hit = vec![false; t.flag_count()];
        for &g in &self.map {
            hit[g] = true;
        }
        hit.into_iter().all(|b| b)
    }
}

/// The unique base-respecting covering source → target, when one exists.
pub fn find_covering(source: &Rooted, target: &Rooted) -> Result<Option<Covering>> {
    if source.rank() != target.rank() {
        return Err(Error::RankMismatch(source.rank(), target.rank()));
    }
    Ok(
        extend_map(source.graph(), target.graph(), source.base(), target.base()).map(|map| Covering {
            source: source.clone(),
            target: target.clone(),
            map,
        }),
    )
}

/// The mix of two rooted premaniplexes with its bookkeeping: flags of the mix
/// are the pairs reachable from the base pair under the coordinatewise
/// connections, numbered in BFS discovery order (so the base pair is flag 0).
pub struct MixResult {
    pub mix: Rooted,
    pair_labels: Vec<(Flag, Flag)>,
    index: HashMap<(Flag, Flag), Flag>,
    left: Covering,
    right: Covering,
}

impl MixResult {
    /// The originating pair of a mix flag.
    pub fn pair(&self, mix_flag: Flag) -> (Flag, Flag) {
        self.pair_labels[mix_flag]
    }

    pub fn pair_labels(&self) -> &[(Flag, Flag)] {
        &self.pair_labels
    }

    /// The mix flag labeled by the given pair, if the pair is reachable.
    pub fn flag_of_pair(&self, pair: (Flag, Flag)) -> Option<Flag> {
        self.index.get(&pair).copied()
    }

    /// Projection onto the left factor.
    pub fn left(&self) -> &Covering {
        &self.left
    }

    /// Projection onto the right factor.
    pub fn right(&self) -> &Covering {
        &self.right
    }
}

pub fn mix(a: &Rooted, b: &Rooted) -> Result<MixResult> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(a.rank(), b.rank()));
    }
    let n = a.rank();
    let base = (a.base(), b.base());
    let mut pair_labels = vec![base];
    let mut index = HashMap::from([(base, 0)]);
    let mut rows: Vec<Vec<Flag>> = vec![Vec::new(); n];
    let mut head = 0;
    while head < pair_labels.len() {
        let (f1, f2) = pair_labels[head];
        for (i, row) in rows.iter_mut().enumerate() {
            let next = (a.adjacent(f1, i), b.adjacent(f2, i));
            let id = *index.entry(next).or_insert_with(|| {
                pair_labels.push(next);
                pair_labels.len() - 1
            });
            row.push(id);
        }
        head += 1;
    }
    let mix = Rooted::at_zero(Premaniplex::new(rows)?);
    let left = Covering {
        source: mix.clone(),
        target: a.clone(),
        map: pair_labels.iter().map(|&(f1, _)| f1).collect(),
    };
    let right = Covering {
        source: mix.clone(),
        target: b.clone(),
        map: pair_labels.iter().map(|&(_, f2)| f2).collect(),
    };
    Ok(MixResult {
        mix,
        pair_labels,
        index,
        left,
        right,
    })
}

/// A left-associated iterated mix, with the composed projection onto every
/// input retained.
pub struct MixChain {
    pub result: Rooted,
    /// projections[k][f] is the flag of inputs[k] under mix flag f.
    pub projections: Vec<Vec<Flag>>,
}

pub fn mix_many(inputs: &[Rooted]) -> Result<MixChain> {
    let Some(first) = inputs.first() else {
        return Err(Error::EmptyList);
    };
    let mut result = first.clone();
    let mut projections = vec![(0..first.flag_count()).collect::<Vec<Flag>>()];
    for next in &inputs[1..] {
        let step = mix(&result, next)?;
        let left = step.left().map();
        for proj in &mut projections {
            *proj = left.iter().map(|&f| proj[f]).collect();
        }
        projections.push(step.right().map().to_vec());
        result = step.mix;
    }
    Ok(MixChain { result, projections })
}

/// The I-double: the mix with the two-flag graph carrying semi-edges at I.
/// Equals the input (up to rooted isomorphism) when the input is
/// I-orientable; otherwise it is the minimal I-orientable cover, with twice
/// as many flags.
pub fn i_double(m: &Rooted, colors: ColorSet) -> Result<Rooted> {
    let t = two_orbit_stg(m.rank(), colors)?;
    Ok(mix(m, &t)?.mix)
}

/// The smallest regular premaniplex covering m: the mix of m rooted at one
/// representative flag per automorphism orbit (the base flag representing its
/// own orbit). A regular input is returned as-is.
pub fn smallest_regular_cover(m: &Rooted) -> Result<Rooted> {
    let orbits = automorphism_generators(m.graph()).orbits;
    if orbits.is_single_block() {
        return Ok(m.clone());
    }
    let base_block = orbits.block_of(m.base());
    let roots: Vec<Rooted> = (0..orbits.block_count())
        .map(|b| {
            let rep = if b == base_block { m.base() } else { orbits.members(b)[0] };
            m.rebase(rep)
        })
        .collect::<Result<_>>()?;
    Ok(mix_many(&roots)?.result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::symmetry::{flag_orbits, full_symmetry_type_graph, rooted_isomorphic};

    #[test]
    fn polygon_mix_is_lcm() {
        let m = mix(&polygon(2).unwrap(), &polygon(3).unwrap()).unwrap();
        assert_eq!(m.mix.flag_count(), 12);
        assert!(rooted_isomorphic(&m.mix, &polygon(6).unwrap()));
        assert!(m.left().is_valid());
        assert!(m.right().is_valid());
    }

    #[test]
    fn self_mix_is_diagonal() {
        let t = torus_44(1, 2).unwrap();
        let m = mix(&t, &t).unwrap();
        assert!(rooted_isomorphic(&m.mix, &t));
        assert!(m.pair_labels().iter().all(|&(f1, f2)| f1 == f2));
    }

    #[test]
    fn mix_commutes_up_to_rooted_isomorphism() {
        let a = torus_44(1, 2).unwrap();
        let b = cube(3).unwrap();
        let ab = mix(&a, &b).unwrap().mix;
        let ba = mix(&b, &a).unwrap().mix;
        assert!(rooted_isomorphic(&ab, &ba));
    }

    #[test]
    fn three_orbit_mix_loses_chain_transitivity() {
        use crate::symmetry::chain_transitive;
        let (a, b) = three_orbit_pair();
        let m = mix(&a, &b).unwrap().mix;
        assert_eq!(m.flag_count(), 9);
        let del = ColorSet::from_slice(&[0, 3]);
        assert!(chain_transitive(a.graph(), del));
        assert!(chain_transitive(b.graph(), del));
        assert!(!chain_transitive(m.graph(), del));
    }

    #[test]
    fn maniplex_mixed_with_premaniplex_is_maniplex() {
        let c = cube(3).unwrap();
        let t = two_orbit_stg(3, ColorSet::single(1)).unwrap();
        let m = mix(&c, &t).unwrap().mix;
        assert!(m.is_maniplex());
    }

    #[test]
    fn mix_many_folds_with_composed_projections() {
        let inputs = [polygon(2).unwrap(), polygon(3).unwrap(), polygon(4).unwrap()];
        let chain = mix_many(&inputs).unwrap();
        assert!(rooted_isomorphic(&chain.result, &polygon(12).unwrap()));
        for (input, proj) in inputs.iter().zip(&chain.projections) {
            let cov = Covering::new(chain.result.clone(), input.clone(), proj.clone()).unwrap();
            assert!(cov.is_valid());
        }
        let single = mix_many(&inputs[..1]).unwrap();
        assert_eq!(single.result.flag_count(), 4);
        assert!(mix_many(&[]).is_err());
    }

    #[test]
    fn mixing_with_own_stg_changes_nothing() {
        let t = torus_44(1, 2).unwrap();
        let stg = full_symmetry_type_graph(&t);
        let m = mix(&t, &stg).unwrap().mix;
        assert!(rooted_isomorphic(&m, &t));
    }

    #[test]
    fn covering_direction() {
        assert!(find_covering(&polygon(6).unwrap(), &polygon(3).unwrap())
            .unwrap()
            .is_some());
        assert!(find_covering(&polygon(3).unwrap(), &polygon(6).unwrap())
            .unwrap()
            .is_none());
        let t = torus_44(1, 2).unwrap();
        let cov = find_covering(&t, &full_symmetry_type_graph(&t)).unwrap().unwrap();
        assert!(cov.is_valid());
        assert!(find_covering(&t, &polygon(3).unwrap()).is_err());
    }

    #[test]
    fn orientable_double_is_identity() {
        let c = cube(3).unwrap();
        let d = i_double(&c, ColorSet::empty()).unwrap();
        assert!(rooted_isomorphic(&d, &c));
    }

    #[test]
    fn double_of_hemicube_is_cube() {
        let h = from_involutions(&[vec![3, 2, 1, 0], vec![0, 1, 3, 2], vec![0, 2, 1, 3]]).unwrap();
        let d = i_double(&h, ColorSet::empty()).unwrap();
        assert_eq!(d.flag_count(), 48);
        assert!(rooted_isomorphic(&d, &cube(3).unwrap()));
    }

    #[test]
    fn smallest_regular_cover_properties() {
        let c = cube(3).unwrap();
        assert!(rooted_isomorphic(&smallest_regular_cover(&c).unwrap(), &c));

        let t = torus_44(1, 2).unwrap();
        let src = smallest_regular_cover(&t).unwrap();
        assert_eq!(src.flag_count(), 200);
        assert!(flag_orbits(src.graph()).is_single_block());
        let cov = find_covering(&src, &t).unwrap().unwrap();
        assert!(cov.is_valid());
        // For a chiral input the cover is the mix with the oppositely
        // rooted copy.
        let opposite = t.rebase(t.adjacent(t.base(), 0)).unwrap();
        let direct = mix(&t, &opposite).unwrap().mix;
        assert!(rooted_isomorphic(&src, &direct));
    }

    #[test]
    fn smallest_regular_cover_of_prism() {
        let p = prism(3).unwrap();
        let src = smallest_regular_cover(&p).unwrap();
        assert!(flag_orbits(src.graph()).is_single_block());
        assert!(find_covering(&src, &p).unwrap().unwrap().is_valid());
    }
}
