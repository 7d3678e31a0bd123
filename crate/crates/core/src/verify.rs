//! The acceptance checks AC1 to AC11, shared by the test suite and the
//! `covers verify` command.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::enumeration::{
    ball_decomposition_counts, catalan_count, code_cells, code_of, count_rotation_classes,
    enumerate_triangulations, rotation_classes, smoothing_options,
};
use crate::error::Result;
use crate::fixtures::builtin;
use crate::homology::{
    b_n_formula, b_n_recurrence_check, betti_numbers, homology, smith_normal_form, ChainComplex,
    HomologyGroup, CERTIFICATE_MAX_COLS,
};
use crate::polytope::{cube, prism, tetrahedron, CombinatorialPolyhedron};
use crate::pyramitoid::{reduce_to_tetrahedron, Pyramitoid};
use crate::quadrics::{verify_embedding, verify_pyramid_embedding, DEFAULT_TOLERANCE};
use crate::small_cover::{
    boundary_subcomplex, core_graph, dome_cover, full_cover, lift_arcs, BaseComplex,
    SmallCoverComplex,
};
use crate::surgery::{glued_dome_complex, z_homology_two_ways};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Classes with `n <= 6`.
    Fast,
    /// Everything the criteria list, up to `n = 8`.
    Full,
}

impl Level {
    fn max_n(self, full: usize) -> usize {
        match self {
            Level::Fast => full.min(6),
            Level::Full => full,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub const CHECK_TITLES: [&str; 11] = [
    "rotation class counts and Catalan numbers",
    "orbit profile for n = 6",
    "closed form and recurrence for b_n",
    "full-mirror cover homology",
    "dome covers are handlebodies",
    "tetrahedron, prism and cube covers",
    "homology of bipyramitoids computed two ways",
    "code statistics, meridians and ball counts",
    "boundary of boundary vanishes; SNF certificates",
    "quadric residuals",
    "reduction to the tetrahedron",
];

/// Result of one check: pass flag and a one-line detail.
type Verdict = Result<(bool, String)>;

fn classes(n: usize) -> Result<Vec<Pyramitoid>> {
    smoothing_options(n)
}

fn torsion_free(groups: &[HomologyGroup]) -> bool {
    groups.iter().all(HomologyGroup::is_torsion_free)
}

fn ac1() -> Verdict {
    let counts: Vec<usize> = (4..=8).map(count_rotation_classes).collect::<Result<_>>()?;
    let mut sizes = Vec::new();
    let mut catalan_ok = true;
    for n in 4..=10 {
        let len = enumerate_triangulations(n)?.len();
        catalan_ok &= catalan_count(n) == len.into();
        sizes.push(len);
    }
    let ok = counts == [1, 1, 4, 6, 19] && sizes == [2, 5, 14, 42, 132, 429, 1430] && catalan_ok;
    Ok((ok, format!("N_4..N_8 = {counts:?}; sizes n=4..10 = {sizes:?}")))
}

fn ac2() -> Verdict {
    let profile = rotation_classes(6, false)?.orbit_profile();
    Ok((profile == [6, 3, 3, 2], format!("profile {profile:?}")))
}

fn ac3() -> Verdict {
    let rec = b_n_recurrence_check(24);
    let b8 = b_n_formula(8)?;
    Ok((rec && b8 == 129, format!("recurrence to n=24: {rec}; b_8 = {b8}")))
}

fn full_cover_matches(poly: &CombinatorialPolyhedron, b: usize) -> Result<bool> {
    let cx = full_cover(poly)?;
    let h = homology(&cx.chain_complex())?;
    Ok(betti_numbers(&h) == [1, b, b, 1] && torsion_free(&h) && cx.euler_characteristic() == 0)
}

fn ac4(level: Level) -> Verdict {
    let mut checked = 0;
    let mut failed = Vec::new();
    for n in 4..=6 {
        let b = b_n_formula(n)? as usize;
        for y in classes(n)? {
            checked += 1;
            if !full_cover_matches(y.poly(), b)? {
                failed.push(y.label()?.to_string());
            }
        }
    }
    if level == Level::Full {
        let y7 = builtin("y7")?.pyramitoid()?;
        checked += 1;
        if !full_cover_matches(y7.poly(), b_n_formula(7)? as usize)? {
            failed.push(y7.label()?.to_string());
        }
    }
    Ok((failed.is_empty(), format!("{checked} classes; failures {failed:?}")))
}

fn dome_parts(y: &Pyramitoid) -> Result<(SmallCoverComplex, SmallCoverComplex)> {
    let cx = dome_cover(y)?;
    let base = BaseComplex::from_polyhedron(y.poly())?;
    let surface = boundary_subcomplex(&cx, &base)?;
    Ok((cx, surface))
}

fn ac5() -> Verdict {
    let mut checked = 0;
    let mut failed = Vec::new();
    for n in 4..=6 {
        let b = b_n_formula(n)? as usize;
        for y in classes(n)? {
            checked += 1;
            let (cx, surface) = dome_parts(&y)?;
            let h = homology(&cx.chain_complex())?;
            let genus = (2 - surface.euler_characteristic()) / 2;
            let core = core_graph(&cx, &y)?.first_betti();
            let ok = betti_numbers(&h) == [1, b, 0, 0]
                && torsion_free(&h)
                && genus == b as i64
                && core == b;
            if !ok {
                failed.push(y.label()?.to_string());
            }
        }
    }
    Ok((failed.is_empty(), format!("{checked} classes; failures {failed:?}")))
}

fn ac6() -> Verdict {
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, poly, want) in [
        ("tetrahedron", tetrahedron(), [1, 0, 0, 1]),
        ("prism", prism(3), [1, 1, 1, 1]),
        ("cube", cube(), [1, 3, 3, 1]),
    ] {
        let h = homology(&full_cover(&poly)?.chain_complex())?;
        let betti = betti_numbers(&h);
        ok &= betti == want && torsion_free(&h);
        parts.push(format!("{name} {betti:?}"));
    }
    Ok((ok, parts.join("; ")))
}

const BIPYRAMITOIDS: [&str; 4] = ["tetrahedron", "prism", "cube", "gyrobipentaprism"];

fn ac7() -> Verdict {
    let mut parts = Vec::new();
    let mut ok = true;
    for name in BIPYRAMITOIDS {
        let tw = z_homology_two_ways(&builtin(name)?.bipyramitoid()?)?;
        ok &= tw.agree;
        parts.push(format!("{name} {:?}", betti_numbers(&tw.direct)));
    }
    Ok((ok, parts.join("; ")))
}

fn is_cycle(surface: &SmallCoverComplex, chain: &[(usize, i64)]) -> bool {
    let d1 = surface.boundary(1).expect("surface");
    let mut acc = vec![0i64; d1.rows()];
    let cols = d1.columns();
    for &(e, c) in chain {
        for (r, v) in &cols[e] {
            acc[*r] += c * i64::try_from(v).expect("unit entries");
        }
    }
    acc.iter().all(|&x| x == 0)
}

fn ac8(level: Level) -> Verdict {
    let mut checked = 0;
    let mut failed = Vec::new();
    for n in 4..=level.max_n(8) {
        for y in classes(n)? {
            checked += 1;
            let (cells, stats) = code_cells(&y)?;
            let m1 = stats.m1;
            let mut ok = stats.m2 + 2 * m1 == n && stats.m3 + 2 == m1;
            let (cx, surface) = dome_parts(&y)?;
            let curves = lift_arcs(&surface, &y, &code_of(&y)?)?;
            ok &= curves.len() == (n - 3) << (n - 2);
            ok &= curves.iter().all(|c| {
                let mut copies = c.copies.to_vec();
                copies.sort_unstable();
                copies.dedup();
                let mut cross = c.crossings.to_vec();
                cross.sort_unstable();
                cross.dedup();
                copies.len() == 4 && cross.len() == 4 && is_cycle(&surface, &c.chain)
            });
            // Each code cell lifts to one ball per eight solid copies.
            let per_cell = (cx.cell_counts()[3] / 8) as u64;
            let balls = ball_decomposition_counts(&y)?;
            ok &= balls.balls_full == cells.len() as u64 * per_cell;
            if n > 4 {
                ok &= balls.balls_reduced == Some((cells.len() - m1) as u64 * per_cell);
                ok &= balls.meridians_reduced
                    == Some(curves.len() as u64 - m1 as u64 * per_cell);
            }
            if !ok {
                failed.push(y.label()?.to_string());
            }
        }
    }
    Ok((failed.is_empty(), format!("{checked} classes; failures {failed:?}")))
}

/// Every complex built by the other checks, with a name.
fn corpus(level: Level) -> Result<Vec<(String, ChainComplex)>> {
    let mut out = Vec::new();
    for n in 4..=level.max_n(7) {
        let ys = if n == 7 { vec![builtin("y7")?.pyramitoid()?] } else { classes(n)? };
        for y in ys {
            let label = y.label()?;
            out.push((format!("full {label}"), full_cover(y.poly())?.chain_complex()));
            let (cx, surface) = dome_parts(&y)?;
            out.push((format!("dome {label}"), cx.chain_complex()));
            out.push((format!("surface {label}"), surface.chain_complex()));
        }
    }
    for (name, poly) in [("tetrahedron", tetrahedron()), ("prism", prism(3)), ("cube", cube())] {
        out.push((format!("full {name}"), full_cover(&poly)?.chain_complex()));
    }
    for name in BIPYRAMITOIDS {
        out.push((format!("glued {name}"), glued_dome_complex(&builtin(name)?.bipyramitoid()?)?));
    }
    Ok(out)
}

fn ac9(level: Level) -> Verdict {
    let corpus = corpus(level)?;
    let mut dd_failures = Vec::new();
    let mut certified = 0;
    let mut cert_failures = Vec::new();
    for (name, cc) in &corpus {
        if cc.first_dd_failure().is_some() {
            dd_failures.push(name.clone());
        }
        for (k, m) in cc.boundaries().iter().enumerate() {
            if m.cols() <= CERTIFICATE_MAX_COLS {
                let snf = smith_normal_form(m);
                certified += 1;
                if !(snf.has_unimodular_certificate() && snf.verify(m)) {
                    cert_failures.push(format!("{name} d{}", k + 1));
                }
            }
        }
    }
    Ok((
        dd_failures.is_empty() && cert_failures.is_empty(),
        format!(
            "{} complexes, {certified} certified matrices; failures {dd_failures:?} {cert_failures:?}",
            corpus.len()
        ),
    ))
}

/// Seed used by the quadric check.
pub const QUADRIC_SEED: u64 = 20_240_601;

fn ac10() -> Verdict {
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for n in 3..=12 {
        let c = verify_embedding(n, 100, QUADRIC_SEED + n as u64)?;
        ok &= c.passes(DEFAULT_TOLERANCE);
        worst = worst.max(c.max_residual());
        if n >= 4 {
            let p = verify_pyramid_embedding(n, 100, QUADRIC_SEED + n as u64)?;
            ok &= p.passes(DEFAULT_TOLERANCE);
            worst = worst.max(p.max_residual());
        }
    }
    Ok((ok, format!("max residual {worst:.3e}")))
}

fn ac11(level: Level) -> Verdict {
    let mut checked = 0;
    let mut steps = 0;
    let mut failed = Vec::new();
    let tet = tetrahedron();
    for n in 4..=level.max_n(8) {
        for y in classes(n)? {
            checked += 1;
            let r = reduce_to_tetrahedron(&y)?;
            steps += r.steps.len();
            if !(r.rules_hold() && r.steps.len() == n - 3 && r.end.poly().is_isomorphic(&tet, false)) {
                failed.push(y.label()?.to_string());
            }
        }
    }
    Ok((failed.is_empty(), format!("{checked} classes, {steps} contractions; failures {failed:?}")))
}

/// Runs check `id` (1 to 11). Errors count as failures.
pub fn run_check(id: usize, level: Level) -> CheckOutcome {
    let start = Instant::now();
    let verdict = match id {
        1 => ac1(),
        2 => ac2(),
        3 => ac3(),
        4 => ac4(level),
        5 => ac5(),
        6 => ac6(),
        7 => ac7(),
        8 => ac8(level),
        9 => ac9(level),
        10 => ac10(),
        11 => ac11(level),
        _ => panic!("no check {id}"),
    };
    let (passed, detail) = verdict.unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckOutcome {
        id: format!("AC{id}"),
        title: CHECK_TITLES[id - 1].to_string(),
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_suite(level: Level) -> Vec<CheckOutcome> {
    (1..=CHECK_TITLES.len()).map(|id| run_check(id, level)).collect()
}

impl CheckOutcome {
    /// `[PASS] AC3 title: detail`.
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("[{tag}] {} {}: {}", self.id, self.title, self.detail)
    }
}
