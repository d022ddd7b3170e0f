//! Mixing polygons. The mix of a p-gon and a q-gon is the lcm(p,q)-gon, and
//! the lower variance group of the pair has order p/gcd(p,q) — trivial
//! exactly when the q-gon covers the p-gon.

use maniplex::catalog::polygon;
use maniplex::mixing::{find_covering, mix};
use maniplex::polytopality::lower_variance_group;
use maniplex::symmetry::rooted_isomorphic;

fn main() -> maniplex::Result<()> {
    for (p, q) in [(2, 3), (4, 6), (5, 3), (12, 8), (3, 9)] {
        let a = polygon(p)?;
        let b = polygon(q)?;
        let mixed = mix(&a, &b)?.mix;
        let sides = mixed.flag_count() / 2;
        assert!(rooted_isomorphic(&mixed, &polygon(sides)?));
        let variance = lower_variance_group(&a, &b)?;
        let covered = find_covering(&b, &a)?.is_some();
        println!(
            "{p}-gon ◊ {q}-gon = {sides}-gon; variance group order {}; {q}-gon covers {p}-gon: {covered}",
            variance.order()
        );
    }
    Ok(())
}
