use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use covers_core::coxeter::defining_graph;
use covers_core::enumeration::{
    burnside_rotation_count, catalan_count, class_records, enumerate_triangulations,
    pyramitoid_from_triangulation, rotation_classes,
};
use covers_core::fixtures::{builtin, Fixture};
use covers_core::homology::{b_n_formula, homology, HomologyGroup};
use covers_core::pyramitoid::{Label, Pyramitoid};
use covers_core::quadrics::{
    polygon_system, pyramid_system, verify_embedding, verify_pyramid_embedding, EmbeddingCheck,
    DEFAULT_TOLERANCE,
};
use covers_core::small_cover::{
    boundary_subcomplex, check_dd_zero, core_graph, dome_cover, full_cover, BaseComplex,
};
use covers_core::surgery::{glue_bipyramitoid, heegaard_data, z_homology_two_ways, Bipyramitoid, Matching};
use covers_core::verify::{run_suite, Level};

use crate::report::RunReport;
use crate::{Cli, Command, Mirrors, VerifyLevel};

pub fn run(cli: &Cli) -> Result<RunReport> {
    match &cli.command {
        Command::Enumerate { n, dihedral } => enumerate(*n, *dihedral),
        Command::Cover {
            fixture,
            mirrors,
            homology,
            dot,
            dump,
        } => cover(cli, fixture, *mirrors, *homology, dot.as_deref(), dump.as_deref()),
        Command::Bipyramitoid {
            fixture,
            north,
            south,
            offset,
            flip,
            heegaard,
            presentation,
        } => {
            let b = match (fixture, north, south) {
                (Some(f), _, _) => resolve(cli, f)?.bipyramitoid()?,
                (None, Some(n), Some(s)) => {
                    let n = resolve(cli, n)?.pyramitoid()?;
                    let s = resolve(cli, s)?.pyramitoid()?;
                    glue_bipyramitoid(&n, &s, Matching { offset: *offset, flip: *flip })?
                }
                _ => bail!("give a fixture with an equator, or --north and --south"),
            };
            bipyramitoid(&b, heegaard.as_deref(), *presentation)
        }
        Command::Quadrics { n, samples, system } => quadrics(*n, *samples, cli.seed, *system),
        Command::Verify { level } => verify(*level, cli.timing),
    }
}

/// A fixture from `--fixtures-dir`, a JSON path, a label, or the builtins.
fn resolve(cli: &Cli, query: &str) -> Result<Fixture> {
    if let Some(dir) = &cli.fixtures_dir {
        let p = dir.join(format!("{query}.json"));
        if p.is_file() {
            return load(&p);
        }
    }
    let p = PathBuf::from(query);
    if p.is_file() {
        return load(&p);
    }
    if let Ok(label) = query.parse::<Label>() {
        return from_label(&label);
    }
    Ok(builtin(query)?)
}

fn load(path: &Path) -> Result<Fixture> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Fixture::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn from_label(label: &Label) -> Result<Fixture> {
    let n = label.len();
    let t = enumerate_triangulations(n)?
        .into_iter()
        .find(|t| t.label().cyclic_eq(label))
        .with_context(|| format!("no simple {n}-pyramitoid has label {label}"))?;
    let y = pyramitoid_from_triangulation(&t)?;
    Ok(Fixture {
        name: label.to_string(),
        basis: Some(y.basis()),
        polyhedron: y.into_poly(),
        equator: None,
    })
}

#[derive(Serialize, Deserialize)]
struct CachedClass {
    label: String,
    canonical_label: String,
    orbit_size: usize,
    code: Vec<(usize, usize)>,
    cell_types: [usize; 3],
}

#[derive(Serialize, Deserialize)]
struct CachedCensus {
    n: usize,
    dihedral: bool,
    catalan: String,
    burnside: Option<usize>,
    classes: Vec<CachedClass>,
}

fn compute_census(n: usize, dihedral: bool) -> Result<CachedCensus> {
    let census = rotation_classes(n, dihedral)?;
    let classes = class_records(&census)?
        .into_iter()
        .map(|r| CachedClass {
            label: r.label,
            canonical_label: r.canonical_label,
            orbit_size: r.orbit_size,
            code: r.code,
            cell_types: [r.cell_types.m1, r.cell_types.m2, r.cell_types.m3],
        })
        .collect();
    Ok(CachedCensus {
        n,
        dihedral,
        catalan: catalan_count(n).to_string(),
        burnside: if dihedral { None } else { Some(burnside_rotation_count(n)?) },
        classes,
    })
}

/// Uses `COVERS_CACHE_DIR` when set; unreadable entries are recomputed.
fn census(n: usize, dihedral: bool) -> Result<CachedCensus> {
    let Some(dir) = std::env::var_os("COVERS_CACHE_DIR") else {
        return compute_census(n, dihedral);
    };
    let kind = if dihedral { "dihedral" } else { "rotation" };
    let path = PathBuf::from(dir).join(format!("enumerate-{n}-{kind}.json"));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(c) = serde_json::from_str::<CachedCensus>(&text) {
            if c.n == n && c.dihedral == dihedral {
                return Ok(c);
            }
        }
    }
    let c = compute_census(n, dihedral)?;
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
    }
    std::fs::write(&path, serde_json::to_string(&c)?).with_context(|| format!("writing {}", path.display()))?;
    Ok(c)
}

fn enumerate(n: usize, dihedral: bool) -> Result<RunReport> {
    let c = census(n, dihedral)?;
    let mut r = RunReport::new("enumerate");
    let mut profile: Vec<usize> = c.classes.iter().map(|k| k.orbit_size).collect();
    profile.sort_unstable_by(|a, b| b.cmp(a));
    r.param("n", n);
    r.param("dihedral", dihedral);
    r.param("catalan", &c.catalan);
    r.param("classes", c.classes.len());
    r.param("orbit_profile", format!("{profile:?}"));
    r.headers(&["class", "label", "canonical", "orbit", "code", "m1", "m2", "m3"]);
    for (i, k) in c.classes.iter().enumerate() {
        let code: Vec<String> = k.code.iter().map(|(a, b)| format!("({a},{b})")).collect();
        r.row(vec![
            i.to_string(),
            k.label.clone(),
            k.canonical_label.clone(),
            k.orbit_size.to_string(),
            code.join(" "),
            k.cell_types[0].to_string(),
            k.cell_types[1].to_string(),
            k.cell_types[2].to_string(),
        ]);
    }
    let total: usize = profile.iter().sum();
    r.check("orbit sizes sum to the Catalan number", total.to_string() == c.catalan);
    if let Some(b) = c.burnside {
        r.check("class count matches the Burnside count", b == c.classes.len());
    }
    Ok(r)
}

fn groups_row(h: &[HomologyGroup], d: usize) -> String {
    h.get(d).map_or_else(String::new, ToString::to_string)
}

fn cover(
    cli: &Cli,
    query: &str,
    mirrors: Mirrors,
    want_homology: bool,
    dot: Option<&Path>,
    dump: Option<&Path>,
) -> Result<RunReport> {
    let fx = resolve(cli, query)?;
    let poly = &fx.polyhedron;
    let base = BaseComplex::from_polyhedron(poly)?;
    let mut r = RunReport::new("cover");
    r.param("fixture", &fx.name);
    let (cx, pyr): (_, Option<Pyramitoid>) = match mirrors {
        Mirrors::All => (full_cover(poly)?, None),
        Mirrors::Dome => {
            let y = fx.pyramitoid()?;
            (dome_cover(&y)?, Some(y))
        }
    };
    r.param(
        "mirrors",
        match mirrors {
            Mirrors::All => "all".to_string(),
            Mirrors::Dome => format!("dome {:?}", cx.mirrors()),
        },
    );
    let chi = cx.euler_characteristic();
    r.param("euler_characteristic", chi);
    let h = if want_homology {
        homology(&cx.chain_complex())?
    } else {
        Vec::new()
    };
    let mut headers = vec!["dim", "base_cells", "cells", "predicted"];
    if want_homology {
        headers.push("homology");
    }
    r.headers(&headers);
    let counts = cx.cell_counts();
    let predicted = cx.predicted_counts();
    for d in 0..counts.len() {
        let mut row = vec![
            d.to_string(),
            base.num_cells(d).to_string(),
            counts[d].to_string(),
            predicted[d].to_string(),
        ];
        if want_homology {
            row.push(groups_row(&h, d));
        }
        r.row(row);
    }
    r.check("cell counts follow the coset formula", counts == predicted);
    r.check("boundary of boundary is zero", check_dd_zero(&cx));
    match (&pyr, mirrors) {
        (None, _) => r.check("Euler characteristic is zero", chi == 0),
        (Some(y), _) => {
            let surface = boundary_subcomplex(&cx, &base)?;
            let genus = (2 - surface.euler_characteristic()) / 2;
            r.param("boundary_genus", genus);
            if y.is_simple() {
                let b = b_n_formula(y.n())?;
                r.param("core_graph_betti", core_graph(&cx, y)?.first_betti());
                r.check("boundary genus equals b_n", genus == b as i64);
            }
        }
    }
    if let Some(path) = dot {
        let text = match &pyr {
            None => {
                let all: Vec<usize> = (0..poly.num_faces()).collect();
                defining_graph(poly, &all)?.to_dot("defining")
            }
            Some(y) => core_graph(&cx, y)?.to_dot("core"),
        };
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = dump {
        std::fs::write(path, cx.dump()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(r)
}

fn bipyramitoid(b: &Bipyramitoid, heegaard: Option<&Path>, presentation: bool) -> Result<RunReport> {
    let n = b.n();
    let mut r = RunReport::new("bipyramitoid");
    r.param("n", n);
    r.param("faces", format!("{:?}", b.glued.face_vector()));
    r.param("matching", format!("offset {} flip {}", b.matching.offset, b.matching.flip));
    let simple = b.north.is_simple() && b.south.is_simple();
    if let (Ok(nl), Ok(sl)) = (b.north.label(), b.south.label()) {
        r.param("north", nl);
        r.param("south", sl);
    }
    if !simple {
        r.note("halves are not simple; homology and Heegaard data need simple halves");
        r.check("glued polyhedron is valid", b.glued.is_valid());
        return Ok(r);
    }
    let tw = z_homology_two_ways(b)?;
    r.headers(&["degree", "direct", "glued"]);
    for d in 0..tw.direct.len().max(tw.glued.len()) {
        r.row(vec![d.to_string(), groups_row(&tw.direct, d), groups_row(&tw.glued, d)]);
    }
    r.check("homology agrees computed both ways", tw.agree);
    let h = heegaard_data(b)?;
    let bn = b_n_formula(n)? as usize;
    let meridians = (n - 3) << (n - 2);
    r.param("genus", h.genus);
    r.param("meridians", format!("{} + {}", h.north_meridians.len(), h.south_meridians.len()));
    r.param("meridian_ranks", format!("{} + {}", h.north_rank, h.south_rank));
    let crossings: u32 = h.intersection.iter().flatten().sum();
    let pairs = h.intersection.iter().flatten().filter(|&&x| x > 0).count();
    r.param("intersections", format!("{crossings} crossings over {pairs} curve pairs"));
    r.param("diagram_h1", &h.diagram_h1);
    r.check("genus equals b_n", h.genus == bn);
    r.check(
        "meridian counts are (n-3)2^(n-2)",
        h.north_meridians.len() == meridians && h.south_meridians.len() == meridians,
    );
    r.check("meridians span rank b_n on each side", h.north_rank == bn && h.south_rank == bn);
    r.check("diagram H_1 matches the cover", tw.direct.get(1) == Some(&h.diagram_h1));
    if presentation {
        for line in b.pi1_presentation()?.to_string().lines() {
            r.note(line);
        }
    }
    if let Some(path) = heegaard {
        let text = serde_json::to_string_pretty(&h.to_json_value())? + "\n";
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(r)
}

fn quadric_row(kind: &str, c: &EmbeddingCheck) -> Vec<String> {
    vec![
        kind.to_string(),
        c.n.to_string(),
        c.samples.to_string(),
        format!("{:.3e}", c.linear_residual),
        format!("{:.3e}", c.quadric_residual),
        format!("{:.3e}", c.min_coordinate),
        format!("{:.3e}", c.sum_defect),
    ]
}

fn quadrics(n: usize, samples: usize, seed: u64, system: bool) -> Result<RunReport> {
    let poly = verify_embedding(n, samples, seed)?;
    let pyr = verify_pyramid_embedding(n, samples, seed)?;
    let mut r = RunReport::new("quadrics");
    r.param("n", n);
    r.param("samples", samples);
    r.param("seed", seed);
    r.param("tolerance", format!("{DEFAULT_TOLERANCE:e}"));
    r.headers(&["kind", "n", "points", "linear", "quadric", "min_coord", "sum_defect"]);
    r.row(quadric_row("polygon", &poly));
    r.row(quadric_row("pyramid", &pyr));
    r.check("polygon residual below tolerance", poly.passes(DEFAULT_TOLERANCE));
    r.check("pyramid residual below tolerance", pyr.passes(DEFAULT_TOLERANCE));
    if system {
        r.note("polygon system:");
        for l in polygon_system(n)?.to_text().lines() {
            r.note(l);
        }
        r.note("pyramid system:");
        for l in pyramid_system(n)?.0.to_text().lines() {
            r.note(l);
        }
    }
    Ok(r)
}

fn verify(level: VerifyLevel, timing: bool) -> Result<RunReport> {
    let level = match level {
        VerifyLevel::Fast => Level::Fast,
        VerifyLevel::Full => Level::Full,
    };
    let mut r = RunReport::new("verify");
    r.param("level", format!("{level:?}").to_lowercase());
    let mut headers = vec!["id", "title", "result", "detail"];
    if timing {
        headers.push("seconds");
    }
    r.headers(&headers);
    for o in run_suite(level) {
        let mut row = vec![
            o.id.clone(),
            o.title.clone(),
            if o.passed { "PASS" } else { "FAIL" }.to_string(),
            o.detail.clone(),
        ];
        if timing {
            row.push(format!("{:.3}", o.elapsed.as_secs_f64()));
        }
        r.row(row);
        r.check(format!("{} {}", o.id, o.title), o.passed);
    }
    Ok(r)
}
