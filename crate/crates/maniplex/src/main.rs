//! Command-line interface over the library.
//!
//! Each command delegates to exactly one library operation; nothing is
//! recomputed here, so a printed verdict always equals the library verdict.
//! Exit code 0 on success, 1 when `pip` or `admissible` reports a negative
//! verdict, 2 on any error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use maniplex::catalog;
use maniplex::document::{self, Document};
use maniplex::dot;
use maniplex::mixing;
use maniplex::polytopality::{self, PipMode};
use maniplex::symmetry::{self, TwoOrbitClass};
use maniplex::{ColorSet, Error, Result, Rooted};

#[derive(Parser)]
#[command(name = "maniplex", version, about = "Premaniplex toolkit: mixing, symmetry, polytopality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Input selection shared by every command. Built-in specs are instantiated
/// first, then document files, preserving order within each group.
#[derive(Args)]
struct Inputs {
    /// Premaniplex document files
    #[arg(value_name = "FILE")]
    files: Vec<PathBuf>,

    /// Built-in input such as "cube(3)", "torus(1,2)", "two_orbit(4,0,3)",
    /// or nested like "medial(torus(1,2))"; placed before the files
    #[arg(long = "catalog", value_name = "SPEC")]
    catalog: Vec<String>,

    /// Rebase every input at this flag
    #[arg(long, value_name = "FLAG")]
    base: Option<usize>,

    /// Require every input to have this rank
    #[arg(long, value_name = "N")]
    rank: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate the inputs
    Validate(Inputs),
    /// Print flag count, orbit count, two-orbit class, and transitivity
    Info(Inputs),
    /// Mix the inputs (two or more) into one premaniplex
    Mix {
        #[command(flatten)]
        inputs: Inputs,
        /// Output document path (defaults to standard output)
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Reverse the color order of the input
    Dual {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Build the two-fold cover with semi-edges of the given colors unwound
    Double {
        #[command(flatten)]
        inputs: Inputs,
        /// Colors kept inside the orientation classes, as a comma list
        #[arg(short = 'I', long = "colors", value_name = "COLORS", value_parser = parse_colors, default_value = "")]
        colors: ColorSet,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check the polytopality intersection property
    Pip {
        #[command(flatten)]
        inputs: Inputs,
        /// Use the recursive check instead of the direct one
        #[arg(long, value_enum, value_name = "MODE")]
        mode: Option<ModeArg>,
    },
    /// Lower variance group of the first input with respect to the second
    Variance(Inputs),
    /// Write the smallest regular cover and report its polytopality
    Src {
        #[command(flatten)]
        inputs: Inputs,
        /// Output document path for the cover
        #[arg(short, long, value_name = "FILE")]
        output: PathBuf,
    },
    /// Check whether the second input is a symmetry type graph of the first
    Admissible(Inputs),
    /// Export the flag graph in DOT format
    ExportDot {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Recurse on facets, with one pairwise condition per middle color
    FacetOnly,
    /// Recurse on facets and vertex figures, with one pairwise condition
    FacetAndVertex,
    /// Like facet-and-vertex but checking the base flag only; requires
    /// transitivity on medial sections
    MedialTransitive,
}

impl From<ModeArg> for PipMode {
    fn from(m: ModeArg) -> PipMode {
        match m {
            ModeArg::FacetOnly => PipMode::FacetOnly,
            ModeArg::FacetAndVertex => PipMode::FacetAndVertex,
            ModeArg::MedialTransitive => PipMode::MedialTransitive,
        }
    }
}

fn parse_colors(s: &str) -> std::result::Result<ColorSet, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(ColorSet::empty());
    }
    let mut out = ColorSet::empty();
    for part in s.split(',') {
        let color: usize = part.trim().parse().map_err(|_| format!("bad color `{}`", part.trim()))?;
        out = out.with(color);
    }
    Ok(out)
}

/// Splits at top-level commas, so nested specs keep their own argument lists.
fn split_args(s: &str) -> Vec<String> {
    if s.trim().is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                current.push(c);
            }
            ',' if depth == 0 => {
                out.push(current.trim().to_string());
                current.clear();
            }
            _ => current.push(c),
        }
    }
    out.push(current.trim().to_string());
    out
}

fn build_spec(spec: &str) -> Result<Rooted> {
    let spec = spec.trim();
    let bad = |msg: &str| Error::BadParameter(format!("`{spec}`: {msg}"));
    let open = spec.find('(').ok_or_else(|| bad("expected NAME(ARGS)"))?;
    if !spec.ends_with(')') {
        return Err(bad("expected NAME(ARGS)"));
    }
    let name = spec[..open].trim();
    let args = split_args(&spec[open + 1..spec.len() - 1]);
    let arity = |n: usize| if args.len() == n { Ok(()) } else { Err(bad("wrong number of arguments")) };
    let int = |k: usize| -> Result<usize> {
        args[k].parse().map_err(|_| bad("arguments must be integers"))
    };
    let signed = |k: usize| -> Result<i64> {
        args[k].parse().map_err(|_| bad("arguments must be integers"))
    };
    match name {
        "polygon" => arity(1).and_then(|_| catalog::polygon(int(0)?)),
        "cube" => arity(1).and_then(|_| catalog::cube(int(0)?)),
        "simplex" => arity(1).and_then(|_| catalog::simplex(int(0)?)),
        "prism" => arity(1).and_then(|_| catalog::prism(int(0)?)),
        "point" => arity(1).and_then(|_| catalog::point(int(0)?)),
        "torus" | "torus_44" => arity(2).and_then(|_| catalog::torus_44(signed(0)?, signed(1)?)),
        "two_orbit" => {
            if args.is_empty() {
                return Err(bad("two_orbit needs a rank and optional colors"));
            }
            let rank = int(0)?;
            let mut colors = ColorSet::empty();
            for k in 1..args.len() {
                colors = colors.with(int(k)?);
            }
            catalog::two_orbit_stg(rank, colors)
        }
        "ditope" => arity(1).and_then(|_| Ok(catalog::ditope(&build_spec(&args[0])?))),
        "medial" => arity(1).and_then(|_| catalog::medial(&build_spec(&args[0])?)),
        "dual" => arity(1).and_then(|_| Ok(build_spec(&args[0])?.dual())),
        _ => Err(bad("unknown builder")),
    }
}

impl Inputs {
    fn load(&self) -> Result<Vec<Rooted>> {
        let mut out = Vec::new();
        for spec in &self.catalog {
            out.push(build_spec(spec)?);
        }
        for path in &self.files {
            out.push(document::read_file(path)?);
        }
        if let Some(b) = self.base {
            out = out.into_iter().map(|p| p.rebase(b)).collect::<Result<_>>()?;
        }
        if let Some(r) = self.rank {
            if let Some(p) = out.iter().find(|p| p.rank() != r) {
                return Err(Error::RankMismatch(p.rank(), r));
            }
        }
        if out.is_empty() {
            return Err(Error::BadParameter("no inputs given".to_string()));
        }
        Ok(out)
    }

    fn one(&self) -> Result<Rooted> {
        let mut all = self.load()?;
        if all.len() != 1 {
            return Err(Error::BadParameter("this command takes exactly one input".to_string()));
        }
        Ok(all.pop().unwrap())
    }

    fn two(&self) -> Result<(Rooted, Rooted)> {
        let mut all = self.load()?;
        if all.len() != 2 {
            return Err(Error::BadParameter("this command takes exactly two inputs".to_string()));
        }
        let b = all.pop().unwrap();
        Ok((all.pop().unwrap(), b))
    }
}

fn emit(p: &Rooted, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => {
            document::write_file(path, p)?;
            println!("wrote {} ({} flags)", path.display(), p.flag_count());
        }
        None => print!("{}", document::serialize(&Document::from_rooted(p))),
    }
    Ok(())
}

fn info(p: &Rooted) -> String {
    let orbit_count = symmetry::flag_orbits(p).block_count();
    let class = match symmetry::two_orbit_class(p) {
        TwoOrbitClass::Regular => "regular".to_string(),
        TwoOrbitClass::Class(colors) => format!("class 2_{colors}"),
        TwoOrbitClass::KOrbit(k) => format!("{k}-orbit"),
    };
    let orbit_word = if orbit_count == 1 { "orbit" } else { "orbits" };
    let mut out = format!("{} flags, {orbit_count} {orbit_word}, {class}\n", p.flag_count());
    let face_transitive: Vec<String> = (0..p.rank())
        .filter(|&i| symmetry::chain_transitive(p, ColorSet::single(i)))
        .map(|i| i.to_string())
        .collect();
    out.push_str(&if face_transitive.len() == p.rank() {
        "transitive on i-faces for every rank i\n".to_string()
    } else if face_transitive.is_empty() {
        "not transitive on i-faces for any rank i\n".to_string()
    } else {
        format!("transitive on i-faces for i in {{{}}}\n", face_transitive.join(","))
    });
    out
}

/// Runs one command; `Ok(false)` is a negative verdict (exit code 1).
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Validate(inputs) => {
            for p in inputs.load()? {
                println!("ok: rank {}, {} flags", p.rank(), p.flag_count());
            }
            Ok(true)
        }
        Command::Info(inputs) => {
            print!("{}", info(&inputs.one()?));
            Ok(true)
        }
        Command::Mix { inputs, output } => {
            let all = inputs.load()?;
            if all.len() < 2 {
                return Err(Error::BadParameter("mix takes at least two inputs".to_string()));
            }
            emit(&mixing::mix_many(&all)?.result, output.as_ref())?;
            Ok(true)
        }
        Command::Dual { inputs, output } => {
            emit(&inputs.one()?.dual(), output.as_ref())?;
            Ok(true)
        }
        Command::Double { inputs, colors, output } => {
            emit(&mixing::i_double(&inputs.one()?, colors)?, output.as_ref())?;
            Ok(true)
        }
        Command::Pip { inputs, mode } => {
            let p = inputs.one()?;
            match mode {
                None => match polytopality::pip_check_witness(&p)? {
                    None => {
                        println!("polytopal: true");
                        Ok(true)
                    }
                    Some(w) => {
                        println!("polytopal: false");
                        println!(
                            "witness: flags {} and {} share end sections but split the [{}, {}] section",
                            w.flag_a, w.flag_b, w.lo, w.hi
                        );
                        Ok(false)
                    }
                },
                Some(mode) => {
                    let verdict = polytopality::pip_check_recursive(&p, mode.into())?;
                    println!("polytopal: {verdict}");
                    Ok(verdict)
                }
            }
        }
        Command::Variance(inputs) => {
            let (a, b) = inputs.two()?;
            let group = polytopality::lower_variance_group(&a, &b)?;
            println!("order: {}", group.order());
            println!("well-defined: {}", group.well_defined);
            if let Some(f) = group.witness {
                println!("witness: flag {f} lies outside the base orbit");
            }
            Ok(true)
        }
        Command::Src { inputs, output } => {
            let p = inputs.one()?;
            let cover = mixing::smallest_regular_cover(&p)?;
            document::write_file(&output, &cover)?;
            println!("wrote {} ({} flags)", output.display(), cover.flag_count());
            match polytopality::regular_cover_polytopality(&p) {
                Ok(report) => {
                    println!("polytopal: {} (two-orbit certificate)", report.verdict);
                    println!("facets polytopal: {}", report.facets_polytopal);
                    println!("vertex figures polytopal: {}", report.vertex_figures_polytopal);
                    println!("variance condition: {}", report.variance_condition);
                }
                Err(Error::PreconditionViolated(_)) => {
                    println!("polytopal: {} (direct check of the cover)", polytopality::pip_check(&cover)?);
                }
                Err(e) => return Err(e),
            }
            Ok(true)
        }
        Command::Admissible(inputs) => {
            let (m, t) = inputs.two()?;
            let verdict = symmetry::is_admissible(&m, &t)?;
            println!("admissible: {verdict}");
            Ok(verdict)
        }
        Command::ExportDot { inputs, output } => {
            let p = inputs.one()?;
            match output {
                Some(path) => {
                    dot::write_dot(&path, &p)?;
                    println!("wrote {}", path.display());
                }
                None => print!("{}", dot::export_dot(&p)),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use maniplex::symmetry::rooted_isomorphic;

    #[test]
    fn builds_catalog_specs() {
        assert_eq!(build_spec("polygon(6)").unwrap().flag_count(), 12);
        assert_eq!(build_spec("torus(1,2)").unwrap().flag_count(), 40);
        assert_eq!(build_spec(" cube( 3 ) ").unwrap().flag_count(), 48);
        assert_eq!(build_spec("two_orbit(4,0,3)").unwrap().rank(), 4);
        let medial = build_spec("medial(cube(3))").unwrap();
        assert!(rooted_isomorphic(&medial, &catalog::medial(&catalog::cube(3).unwrap()).unwrap()));
        let dual = build_spec("dual(cube(3))").unwrap();
        assert!(rooted_isomorphic(&dual, &catalog::cube(3).unwrap().dual()));
        assert_eq!(build_spec("ditope(polygon(4))").unwrap().rank(), 3);
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(build_spec("polygon").is_err());
        assert!(build_spec("polygon(2,3)").is_err());
        assert!(build_spec("frobnicate(1)").is_err());
        assert!(build_spec("polygon(x)").is_err());
    }

    #[test]
    fn parses_color_lists() {
        assert_eq!(parse_colors("0,3").unwrap(), ColorSet::from_slice(&[0, 3]));
        assert_eq!(parse_colors("").unwrap(), ColorSet::empty());
        assert!(parse_colors("0,x").is_err());
    }

    #[test]
    fn info_summarizes_symmetry() {
        let text = info(&build_spec("torus(1,2)").unwrap());
        assert!(text.starts_with("40 flags, 2 orbits, class 2_{}\n"));
        let regular = info(&build_spec("cube(3)").unwrap());
        assert!(regular.starts_with("48 flags, 1 orbit, regular\n"));
        assert!(regular.contains("every rank"));
    }
}
