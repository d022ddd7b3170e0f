//! Orientability and I-doubles. The hemicube is the antipodal quotient of
//! the cube: non-orientable, and its orientation double cover is the cube
//! again. Doubling an already-orientable input changes nothing, and the
//! polytopality of a double is decided by a three-way case split on which
//! derived sections are orientable.

use maniplex::catalog::{cube, from_involutions, simplex};
use maniplex::mixing::i_double;
use maniplex::polytopality::double_polytopality;
use maniplex::symmetry::{is_orientable, rooted_isomorphic};
use maniplex::{ColorSet, Rooted};

fn hemicube() -> maniplex::Result<Rooted> {
    from_involutions(&[vec![3, 2, 1, 0], vec![0, 1, 3, 2], vec![0, 2, 1, 3]])
}

fn main() -> maniplex::Result<()> {
    let h = hemicube()?;
    let orientable = is_orientable(&h, ColorSet::empty());
    println!("hemicube: {} flags, orientable: {orientable}", h.flag_count());
    let doubled = i_double(&h, ColorSet::empty())?;
    println!(
        "its orientation double has {} flags and is the cube again: {}",
        doubled.flag_count(),
        rooted_isomorphic(&doubled, &cube(3)?)
    );
    let redoubled = i_double(&doubled, ColorSet::empty())?;
    println!("doubling the cube changes nothing: {}", rooted_isomorphic(&redoubled, &doubled));

    let octahedron = cube(3)?.dual();
    for (name, p) in [("octahedron", octahedron), ("tetrahedron", simplex(3)?)] {
        let verdict = double_polytopality(&p, ColorSet::single(1))?;
        println!("{name} doubled over {{1}}: case {:?}, polytopal: {}", verdict.case, verdict.polytopal);
    }
    Ok(())
}
