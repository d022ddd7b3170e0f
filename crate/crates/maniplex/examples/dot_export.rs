//! Artifact output: the JSON document format and DOT export of the flag
//! graph. Prints the DOT text of a nine-flag mix of two three-orbit
//! premaniplexes and writes both artifacts to the system temp directory.

use maniplex::catalog::three_orbit_pair;
use maniplex::document::{write_file, Document};
use maniplex::dot::{export_dot, write_dot};
use maniplex::mixing::mix;

fn main() -> maniplex::Result<()> {
    let (a, b) = three_orbit_pair();
    let mixed = mix(&a, &b)?.mix;
    print!("{}", export_dot(&mixed));

    let dir = std::env::temp_dir();
    let json = dir.join("nine_flag_mix.json");
    let dot = dir.join("nine_flag_mix.dot");
    write_file(&json, &mixed)?;
    write_dot(&dot, &mixed)?;
    println!("\nwrote {} and {}", json.display(), dot.display());
    println!("document name field is optional: {:?}", Document::with_name(&mixed, "nine-flag mix").name);
    Ok(())
}
