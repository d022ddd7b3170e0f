//! Polytopality certificates and variance groups.
//!
//! A maniplex is the flag graph of an abstract polytope exactly when it has
//! the path intersection property: any two flags joined by a path of colors
//! in `[0, hi]` and by a path of colors in `[lo, n-1]` are joined by a path
//! of colors in `[lo, hi]`. `pip_check` tests this directly by brute force;
//! `pip_check_recursive` tests equivalent recursive criteria. The remaining
//! functions predict polytopality of mixes, doubles, and smallest regular
//! covers from sections and symmetries of the factors, so that the large
//! object never has to be searched — only built, if at all, for
//! cross-checking.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};

use crate::catalog::{compose, is_permutation, two_orbit_stg};
use crate::colors::ColorSet;
use crate::error::{Error, Result};
use crate::mixing::mix;
use crate::partition::OrbitPartition;
use crate::premaniplex::{Flag, Premaniplex, Rooted};
use crate::symmetry::{
    automorphisms, chain_transitive, flag_orbits, is_admissible, is_orientable, two_orbit_class,
    Automorphism, TwoOrbitClass,
};

/// Two flags joined within `[0, hi]` and within `[lo, n-1]` but not within
/// `[lo, hi]`: a counterexample to the path intersection property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipWitness {
    pub flag_a: Flag,
    pub flag_b: Flag,
    pub lo: usize,
    pub hi: usize,
}

/// Checks the path intersection property over every interval pair
/// `0 <= lo <= hi <= n-1` and reports the first violation found.
///
/// Instances with `lo = 0` or `hi = n-1` hold in every premaniplex, because
/// one of the hypothesis intervals already contains the conclusion interval;
/// only `1 <= lo <= hi <= n-2` is scanned. Errors with `NotAManiplex` on
/// inputs with semi-edges: the property characterizes polytopes only among
/// maniplexes.
pub fn pip_check_witness(p: &Premaniplex) -> Result<Option<PipWitness>> {
    if !p.is_maniplex() {
        return Err(Error::NotAManiplex);
    }
    let n = p.rank();
    if n <= 2 {
        return Ok(None);
    }
    for lo in 1..=n - 2 {
        let right = p.interval_orbits(ColorSet::interval(lo, n - 1));
        for hi in lo..=n - 2 {
            let left = p.interval_orbits(ColorSet::interval(0, hi));
            let mid = p.interval_orbits(ColorSet::interval(lo, hi));
            if let Some((flag_a, flag_b)) = refinement_violation(p, &left, &right, &mid) {
                return Ok(Some(PipWitness { flag_a, flag_b, lo, hi }));
            }
        }
    }
    Ok(None)
}

/// Whether the maniplex is the flag graph of an abstract polytope.
pub fn pip_check(p: &Premaniplex) -> Result<bool> {
    Ok(pip_check_witness(p)?.is_none())
}

/// First pair of flags sharing a `left` block and a `right` block but split
/// by `mid`. `None` means the common refinement of `left` and `right`
/// refines `mid`. Comparing each flag against one stored representative of
/// its (left, right) group suffices: sharing a mid block is transitive.
fn refinement_violation(
    p: &Premaniplex,
    left: &OrbitPartition,
    right: &OrbitPartition,
    mid: &OrbitPartition,
) -> Option<(Flag, Flag)> {
    let mut reps: HashMap<(usize, usize), Flag> = HashMap::new();
    for f in 0..p.flag_count() {
        match reps.entry((left.block_of(f), right.block_of(f))) {
            Entry::Occupied(e) => {
                let r = *e.get();
                if !mid.same_block(r, f) {
                    return Some((r, f));
                }
            }
            Entry::Vacant(e) => {
                e.insert(f);
            }
        }
    }
    None
}

/// One rooted section per block of the `[lo, hi]` interval, deduplicated up
/// to rooted isomorphism and paired with the flag it was cut at. An empty
/// interval yields no sections.
fn section_types(g: &Rooted, lo: usize, hi: usize) -> Result<Vec<(Flag, Rooted)>> {
    if lo > hi {
        return Ok(Vec::new());
    }
    let blocks = g.interval_orbits(ColorSet::interval(lo, hi));
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for block in blocks.blocks() {
        let rep = block[0];
        let sec = g.rebase(rep)?.section(lo, hi)?;
        if seen.insert(sec.canonical_form()) {
            out.push((rep, sec));
        }
    }
    Ok(out)
}

/// Polytopality of every section under `[lo, hi]`, with a cut flag of the
/// first failing section as witness.
fn sections_polytopal(g: &Rooted, lo: usize, hi: usize) -> Result<(bool, Option<Flag>)> {
    for (rep, sec) in section_types(g, lo, hi)? {
        if !pip_check(sec.graph())? {
            return Ok((false, Some(rep)));
        }
    }
    Ok((true, None))
}

/// Recursive polytopality criteria, each equivalent to the full path
/// intersection property but with a different recursion shape and cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PipMode {
    /// Recurse into facets only, plus one pairwise intersection condition
    /// per color.
    FacetOnly,
    /// Recurse into facets and vertex figures, plus a single pairwise
    /// intersection condition.
    FacetAndVertex,
    /// Like `FacetAndVertex`, but the condition is checked against the base
    /// flag only; requires transitivity on medial sections.
    MedialTransitive,
}

/// Checks polytopality through one of the recursive criteria. All modes
/// agree with `pip_check` wherever their preconditions hold.
pub fn pip_check_recursive(p: &Rooted, mode: PipMode) -> Result<bool> {
    if !p.is_maniplex() {
        return Err(Error::NotAManiplex);
    }
    if mode == PipMode::MedialTransitive && p.rank() > 2 && !medial_transitive(p.graph()) {
        return Err(Error::ModePrecondition(
            "the base-flag criterion needs transitivity on medial sections",
        ));
    }
    recursive_check(p, mode)
}

/// Transitive on medial sections: a symmetry type graph stays connected
/// using colors `1..=n-2` alone, so every flag reaches the base orbit
/// without leaving its medial section.
fn medial_transitive(p: &Premaniplex) -> bool {
    let n = p.rank();
    chain_transitive(p, ColorSet::interval(1, n - 2).complement(n))
}

fn recursive_check(p: &Rooted, mode: PipMode) -> Result<bool> {
    let n = p.rank();
    if n <= 2 {
        return Ok(true);
    }
    for (_, facet) in section_types(p, 0, n - 2)? {
        if !recursive_check(&facet, submode(&facet, mode))? {
            return Ok(false);
        }
    }
    match mode {
        PipMode::FacetOnly => {
            let left = p.interval_orbits(ColorSet::interval(0, n - 2));
            for i in 1..=n - 2 {
                let right = p.interval_orbits(ColorSet::interval(i, n - 1));
                let mid = p.interval_orbits(ColorSet::interval(i, n - 2));
                if refinement_violation(p.graph(), &left, &right, &mid).is_some() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        PipMode::FacetAndVertex | PipMode::MedialTransitive => {
            for (_, vf) in section_types(p, 1, n - 1)? {
                if !recursive_check(&vf, submode(&vf, mode))? {
                    return Ok(false);
                }
            }
            let left = p.interval_orbits(ColorSet::interval(0, n - 2));
            let right = p.interval_orbits(ColorSet::interval(1, n - 1));
            let mid = p.interval_orbits(ColorSet::interval(1, n - 2));
            if mode == PipMode::FacetAndVertex {
                Ok(refinement_violation(p.graph(), &left, &right, &mid).is_none())
            } else {
                let b = p.base();
                for f in 0..p.flag_count() {
                    if left.same_block(b, f) && right.same_block(b, f) && !mid.same_block(b, f) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

/// Sections inherit the caller's mode, except that the base-flag criterion
/// falls back to the pairwise one on sections lacking the transitivity it
/// needs.
fn submode(section: &Rooted, mode: PipMode) -> PipMode {
    if mode == PipMode::MedialTransitive
        && section.rank() > 2
        && !medial_transitive(section.graph())
    {
        PipMode::FacetAndVertex
    } else {
        mode
    }
}

/// Whether involutory generators with the string commutation pattern satisfy
/// the intersection condition, i.e. generate a string C-group — the groups
/// of regular polytopes.
///
/// Generators are permutations of a common point set, given as image tables.
/// The check is recursive: the subgroups generated by all but the last and
/// all but the first generator must themselves be string C-groups and must
/// intersect exactly in the subgroup generated by the middle ones. Feeding
/// in the connection maps of a regular maniplex decides its polytopality.
pub fn is_string_c_group(generators: &[Vec<usize>]) -> Result<bool> {
    let deg = validate_string_relations(generators)?;
    Ok(string_c_inner(generators, deg))
}

/// Degree of the common point set, or an error describing the first failed
/// string relation.
fn validate_string_relations(generators: &[Vec<usize>]) -> Result<usize> {
    let deg = match generators.first() {
        Some(g) => g.len(),
        None => return Ok(0),
    };
    for (i, g) in generators.iter().enumerate() {
        if g.len() != deg || !is_permutation(g) {
            return Err(Error::NotSggi(format!(
                "generator {i} is not a permutation of the point set"
            )));
        }
        if (0..deg).any(|x| g[g[x]] != x) {
            return Err(Error::NotSggi(format!("generator {i} is not an involution")));
        }
    }
    for i in 0..generators.len() {
        for j in i + 2..generators.len() {
            let (a, b) = (&generators[i], &generators[j]);
            if (0..deg).any(|x| a[b[x]] != b[a[x]]) {
                return Err(Error::NotSggi(format!(
                    "generators {i} and {j} do not commute"
                )));
            }
        }
    }
    Ok(deg)
}

fn string_c_inner(generators: &[Vec<usize>], deg: usize) -> bool {
    let k = generators.len();
    if k <= 2 {
        return true;
    }
    let facet = &generators[..k - 1];
    let vertex = &generators[1..];
    if !string_c_inner(facet, deg) || !string_c_inner(vertex, deg) {
        return false;
    }
    let a = generated_elements(facet, deg);
    let b = generated_elements(vertex, deg);
    let middle = generated_elements(&generators[1..k - 1], deg);
    a.intersection(&b).all(|g| middle.contains(g))
}

fn generated_elements(generators: &[Vec<usize>], deg: usize) -> HashSet<Vec<usize>> {
    let identity: Vec<usize> = (0..deg).collect();
    let mut seen = HashSet::new();
    let mut queue = vec![identity.clone()];
    seen.insert(identity);
    while let Some(g) = queue.pop() {
        for x in generators {
            let h = compose(&g, x);
            if seen.insert(h.clone()) {
                queue.push(h);
            }
        }
    }
    seen
}

/// The lower variance group of `a` relative to `b`: the automorphisms of `a`
/// carrying its base flag onto the first coordinates of the mix fiber over
/// `b`'s base flag. Its order measures how far `b` is from covering `a` —
/// trivial exactly when a covering `b -> a` exists.
#[derive(Clone)]
pub struct VarianceGroup {
    /// The rooted premaniplex whose automorphisms these are.
    pub host: Rooted,
    /// One automorphism per fiber coordinate in the base orbit, sorted by
    /// the image of the host base flag; always contains the identity.
    pub elements: Vec<Automorphism>,
    /// False when a fiber coordinate escapes the base orbit of the host or
    /// the collected elements are not closed under composition.
    pub well_defined: bool,
    /// A flag witnessing the failure when `well_defined` is false: either a
    /// fiber coordinate outside the base orbit, or a composite image missing
    /// from the fiber.
    pub witness: Option<Flag>,
}

impl VarianceGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

/// Computes the lower variance group of `a` relative to `b` by building
/// their mix and reading off the fiber over `b`'s base flag.
pub fn lower_variance_group(a: &Rooted, b: &Rooted) -> Result<VarianceGroup> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch(a.rank(), b.rank()));
    }
    let mr = mix(a, b)?;
    let group = automorphisms(a.graph());
    let mut elements = Vec::new();
    let mut well_defined = true;
    let mut witness = None;
    for &(l, r) in mr.pair_labels() {
        if r != b.base() {
            continue;
        }
        match group.element_sending(a.base(), l) {
            Some(g) => elements.push(g.clone()),
            None => {
                well_defined = false;
                witness.get_or_insert(l);
            }
        }
    }
    let images: HashSet<Flag> = elements.iter().map(|g| g.apply(a.base())).collect();
    'closure: for g in &elements {
        for h in &elements {
            let image = h.apply(g.apply(a.base()));
            if !images.contains(&image) {
                well_defined = false;
                witness.get_or_insert(image);
                break 'closure;
            }
        }
    }
    elements.sort_by_key(|g| g.apply(a.base()));
    Ok(VarianceGroup { host: a.clone(), elements, well_defined, witness })
}

/// Order of the chirality group: the lower variance group of a maniplex
/// relative to itself re-rooted across a 0-edge. Trivial exactly for
/// reflexible inputs. Requires the input to admit the free two-orbit type —
/// that is, to be chiral or reflexible — so that the comparison is well
/// defined; errors with `NotAdmissible` otherwise (e.g. for non-orientable
/// or many-orbit inputs).
pub fn chirality_group_order(m: &Rooted) -> Result<usize> {
    let t = two_orbit_stg(m.rank(), ColorSet::empty())?;
    if !is_admissible(m, &t)? {
        return Err(Error::NotAdmissible(
            "chirality is measured against the free two-orbit type, which the input does not admit",
        ));
    }
    let mirrored = m.rebase(m.graph().adjacent(m.base(), 0))?;
    Ok(lower_variance_group(m, &mirrored)?.order())
}

/// Witness attached to a negative polytopality report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportWitness {
    /// A flag of the mix whose facet section is not polytopal.
    Facet { flag: Flag },
    /// A flag of the mix whose vertex figure is not polytopal.
    VertexFigure { flag: Flag },
    /// A flag at which the variance condition fails, with the image of the
    /// relevant base flag under the offending automorphism.
    Variance { flag: Flag, automorphism_image: Flag },
}

/// Outcome of a symmetry-based polytopality prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolytopalityReport {
    pub verdict: bool,
    pub facets_polytopal: bool,
    pub vertex_figures_polytopal: bool,
    pub variance_condition: bool,
    pub witness: Option<ReportWitness>,
    /// The color used to re-root a two-orbit input, when one was needed.
    pub rebase_color: Option<usize>,
}

impl PolytopalityReport {
    fn trivially_true() -> Self {
        PolytopalityReport {
            verdict: true,
            facets_polytopal: true,
            vertex_figures_polytopal: true,
            variance_condition: true,
            witness: None,
            rebase_color: None,
        }
    }
}

/// Predicts whether the mix of the polytope `p1` with the premaniplex `p2`
/// is a polytope, given a symmetry type `t` both are admissible for.
///
/// The verdict always equals `pip_check` of the mix. The mix is a polytope
/// iff its facets and vertex figures are polytopes and, at every flag
/// `(f1, f2)`, every automorphism `g` of `p2` for which `(f1, g(f2))` stays
/// in the flag's facet block and vertex block also keeps it in its medial
/// block. The per-flag condition depends only on the flag's three section
/// blocks, so it is evaluated once per distinct block triple.
pub fn mix_polytopality(p1: &Rooted, p2: &Rooted, t: &Rooted) -> Result<PolytopalityReport> {
    if !pip_check(p1.graph())? {
        return Err(Error::PreconditionViolated("the first operand must be a polytope"));
    }
    if !is_admissible(p1, t)? || !is_admissible(p2, t)? {
        return Err(Error::PreconditionViolated(
            "both operands must be admissible for the given symmetry type",
        ));
    }
    let n = p1.rank();
    if n == 1 {
        return Ok(PolytopalityReport::trivially_true());
    }
    let mr = mix(p1, p2)?;
    let q = &mr.mix;
    let (facets_polytopal, fw) = sections_polytopal(q, 0, n - 2)?;
    let (vertex_figures_polytopal, vw) = sections_polytopal(q, 1, n - 1)?;

    let facet_blocks = q.interval_orbits(ColorSet::interval(0, n - 2));
    let vertex_blocks = q.interval_orbits(ColorSet::interval(1, n - 1));
    let medial_blocks = q.interval_orbits(ColorSet::interval(1, n - 2));
    let gamma2 = automorphisms(p2.graph());
    let mut variance_condition = true;
    let mut variance_witness = None;
    let mut seen = HashSet::new();
    'flags: for f in 0..q.flag_count() {
        let triple = (
            facet_blocks.block_of(f),
            vertex_blocks.block_of(f),
            medial_blocks.block_of(f),
        );
        if !seen.insert(triple) {
            continue;
        }
        let (f1, f2) = mr.pair(f);
        for g in gamma2.elements() {
            let other = match mr.flag_of_pair((f1, g.apply(f2))) {
                Some(x) => x,
                None => continue,
            };
            if facet_blocks.same_block(f, other)
                && vertex_blocks.same_block(f, other)
                && !medial_blocks.same_block(f, other)
            {
                variance_condition = false;
                variance_witness = Some(ReportWitness::Variance {
                    flag: f,
                    automorphism_image: g.apply(p2.base()),
                });
                break 'flags;
            }
        }
    }
    let witness = if !facets_polytopal {
        fw.map(|flag| ReportWitness::Facet { flag })
    } else if !vertex_figures_polytopal {
        vw.map(|flag| ReportWitness::VertexFigure { flag })
    } else {
        variance_witness
    };
    Ok(PolytopalityReport {
        verdict: facets_polytopal && vertex_figures_polytopal && variance_condition,
        facets_polytopal,
        vertex_figures_polytopal,
        variance_condition,
        witness,
        rebase_color: None,
    })
}

/// The three mutually exclusive shapes of a double-cover analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoubleCase {
    /// The base facet or the base vertex figure is orientable for its
    /// derived color set; the double is a polytope.
    FacetOrVertexFigureOrientable,
    /// Facet and vertex figure are non-orientable but the medial section is
    /// orientable for its derived set; the double is not a polytope.
    MedialOrientable,
    /// All three sections are non-orientable; the verdict is the conjunction
    /// of the analyses of the facet double and the vertex-figure double.
    MedialNonOrientable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubleVerdict {
    pub case: DoubleCase,
    pub polytopal: bool,
}

/// Predicts whether the double cover of a regular polytope over `colors` is
/// a polytope, without building the cover.
///
/// The input must be regular, polytopal, and not `colors`-orientable (an
/// orientable input is its own double). The derived color sets of the
/// facet, vertex figure, and medial section drive a three-way case split;
/// in the last case the analysis recurses into the facet and vertex figure.
pub fn double_polytopality(p: &Rooted, colors: ColorSet) -> Result<DoubleVerdict> {
    let n = p.rank();
    if !colors.is_proper(n) {
        return Err(Error::ImproperColorSet(colors.to_string()));
    }
    if !flag_orbits(p.graph()).is_single_block() {
        return Err(Error::PreconditionViolated("the input must be regular"));
    }
    if !pip_check(p.graph())? {
        return Err(Error::PreconditionViolated("the input must be a polytope"));
    }
    if is_orientable(p.graph(), colors) {
        return Err(Error::PreconditionViolated(
            "the input is orientable for these colors, so the double is the input itself",
        ));
    }
    // rank 1 is always orientable for the only proper color set, and rank 2
    // always exits through the first case below, so sections never underflow
    let derived_facet = colors.without(n - 1);
    let derived_vertex = colors.shift_down();
    let derived_medial = colors.without(n - 1).shift_down();
    let facet = p.facet()?;
    let vertex_figure = p.vertex_figure()?;
    if is_orientable(facet.graph(), derived_facet)
        || is_orientable(vertex_figure.graph(), derived_vertex)
    {
        return Ok(DoubleVerdict { case: DoubleCase::FacetOrVertexFigureOrientable, polytopal: true });
    }
    let medial = p.medial_section()?;
    if is_orientable(medial.graph(), derived_medial) {
        return Ok(DoubleVerdict { case: DoubleCase::MedialOrientable, polytopal: false });
    }
    let f = double_polytopality(&facet, derived_facet)?;
    let v = double_polytopality(&vertex_figure, derived_vertex)?;
    Ok(DoubleVerdict {
        case: DoubleCase::MedialNonOrientable,
        polytopal: f.polytopal && v.polytopal,
    })
}

/// Predicts whether the smallest regular cover of a two-orbit polytope is a
/// polytope, from variance groups of its base sections.
///
/// The cover of a two-orbit polytope is its mix with itself re-rooted
/// across an edge of some color outside the class; the report records that
/// color. The facet and vertex-figure conditions mix the base sections of
/// the two rootings; the variance conditions compare section variance
/// groups after extending their elements to automorphisms of the whole
/// input, which exist because both rootings admit the class's type graph.
/// The exact combination of conditions depends on which section
/// transitivities the class forces.
pub fn regular_cover_polytopality(p: &Rooted) -> Result<PolytopalityReport> {
    let class = match two_orbit_class(p.graph()) {
        TwoOrbitClass::Class(colors) => colors,
        _ => {
            return Err(Error::PreconditionViolated(
                "the input must be a two-orbit premaniplex in some class",
            ))
        }
    };
    if !pip_check(p.graph())? {
        return Err(Error::PreconditionViolated("the input must be a polytope"));
    }
    // a two-orbit polytope has rank at least 3: polygons and edges are regular
    let n = p.rank();
    let rebase_color = (0..n).find(|&c| !class.contains(c)).expect("two-orbit class is proper");
    let mirrored = p.rebase(p.adjacent(p.base(), rebase_color))?;
    let full = automorphisms(p.graph());
    let reference = p.base();

    // Variance group of the host's base [lo,hi]-section relative to the
    // other rooting's, as the set of images of the reference flag under the
    // global extensions of its elements. A shared reference makes sets from
    // different sections intersectable.
    let section_variance = |host: &Rooted, other: &Rooted, lo: usize, hi: usize| -> Result<HashSet<Flag>> {
        let (host_section, embedding) = host.section_embedding(lo, hi)?;
        let (other_section, _) = other.section_embedding(lo, hi)?;
        let v = lower_variance_group(&host_section, &other_section)?;
        if !v.well_defined {
            return Err(Error::PreconditionViolated(
                "a section variance group is not well-defined",
            ));
        }
        let mut images = HashSet::new();
        for g in &v.elements {
            let ambient = embedding[g.apply(host_section.base())];
            let global = full.element_sending(host.base(), ambient).ok_or(
                Error::PreconditionViolated("a section automorphism does not extend globally"),
            )?;
            images.insert(global.apply(reference));
        }
        Ok(images)
    };
    let mixed_sections_polytopal = |lo: usize, hi: usize| -> Result<bool> {
        let s1 = p.section(lo, hi)?;
        let s2 = mirrored.section(lo, hi)?;
        pip_check(mix(&s1, &s2)?.mix.graph())
    };

    let transitive = medial_transitive(p.graph());
    let complement = class.complement(n);
    // facets and vertex figures of the cover are polytopes outright when the
    // class misses both end colors and the input is medial-section-transitive
    let chiral_like = transitive && class.intersection(ColorSet::from_slice(&[0, n - 1])).is_empty();
    let (facets_polytopal, vertex_figures_polytopal) = if chiral_like {
        (true, true)
    } else {
        (mixed_sections_polytopal(0, n - 2)?, mixed_sections_polytopal(1, n - 1)?)
    };

    let a_facet = section_variance(&mirrored, p, 0, n - 2)?;
    let a_vertex = section_variance(&mirrored, p, 1, n - 1)?;
    let a_medial = section_variance(&mirrored, p, 1, n - 2)?;
    let contained = |x: &HashSet<Flag>, y: &HashSet<Flag>, z: &HashSet<Flag>| {
        x.intersection(y).find(|f| !z.contains(*f)).copied()
    };
    let violation = if transitive {
        contained(&a_facet, &a_vertex, &a_medial)
    } else if complement == ColorSet::from_slice(&[0, n - 1]) {
        let b_medial = section_variance(p, &mirrored, 1, n - 2)?;
        contained(&a_facet, &a_vertex, &a_medial)
            .or(contained(&a_facet, &a_vertex, &b_medial))
    } else if complement == ColorSet::single(n - 1) {
        // facet-intransitive: the second condition swaps the facet roles
        let b_facet = section_variance(p, &mirrored, 0, n - 2)?;
        let b_medial = section_variance(p, &mirrored, 1, n - 2)?;
        contained(&a_facet, &a_vertex, &a_medial)
            .or(contained(&b_facet, &a_vertex, &b_medial))
    } else {
        // vertex-intransitive: the second condition swaps the vertex roles
        let b_vertex = section_variance(p, &mirrored, 1, n - 1)?;
        let b_medial = section_variance(p, &mirrored, 1, n - 2)?;
        contained(&a_facet, &a_vertex, &a_medial)
            .or(contained(&a_facet, &b_vertex, &b_medial))
    };
    let variance_condition = violation.is_none();
    Ok(PolytopalityReport {
        verdict: facets_polytopal && vertex_figures_polytopal && variance_condition,
        facets_polytopal,
        vertex_figures_polytopal,
        variance_condition,
        witness: violation.map(|image| ReportWitness::Variance {
            flag: reference,
            automorphism_image: image,
        }),
        rebase_color: Some(rebase_color),
    })
}
