use std::fs;
use std::io::Write;
use std::path::Path;

use num_rational::Rational64;
use psreg::cutting::vertical_cutting;
use psreg::format::{self, format_rational, Generator, Instance, InstanceFile};
use psreg::geom::Color;
use psreg::graph::intersection_graph;
use psreg::homog::{mighty_pair, unbalanced_mighty, MightyOutcome, Mode, OracleConfig};
use psreg::instances::{self, BBox, GroundedShape, SegmentParams};
use psreg::regularity::{regularity_partition, rodl_extract};
use psreg::separator::curve_separator;
use psreg::sweep::{parse_colors, sweep_select};
use psreg::topo::{
    bisect_inequality_report, disjoint_matching, edge_bound, find_natural_grid, odd_crossing_count, validate_simple,
    TopoDrawing,
};
use psreg::{svg, CurveFamily, SimpleGraph, VSet};

use crate::args::{Cli, Command, GenCommand, OracleMode, Shape, TopoCommand};
use crate::failure::Failure;
use crate::report;

type Out<'a> = &'a mut dyn Write;

pub fn run(cli: Cli, out: Out) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file, svg } => validate(&file, svg.as_deref(), out),
        Command::Graph { file, out: path } => graph(&file, path.as_deref(), out),
        Command::Partition { file, eps, k, oracle, svg, seed } => {
            partition(&file, eps, k, config(oracle, seed.seed), svg.as_deref(), out)
        }
        Command::Rodl { file, eps, oracle, seed } => rodl(&file, eps, config(oracle, seed.seed), out),
        Command::Mighty { file, red_blue_split, c, oracle, seed } => {
            mighty(&file, red_blue_split, config(oracle, seed.seed).with_c(c), out)
        }
        Command::Separator { file } => separator(&file, out),
        Command::Cutting { file, r, seed } => cutting(&file, r, seed.seed, out),
        Command::Sweep { colors } => sweep(&colors, out),
        Command::Topo { command } => topo(command, out),
        Command::Gen { generator, seed, out: path } => generate(generator, seed, path.as_deref(), out),
        Command::Report { dir, out: path } => report::run(&dir, path.as_deref(), out),
    }
}

fn config(mode: OracleMode, seed: u64) -> OracleConfig {
    OracleConfig { mode: mode.into(), seed, ..OracleConfig::default() }
}

pub fn load(path: &Path) -> Result<InstanceFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_curves(path: &Path) -> Result<CurveFamily, Failure> {
    match load(path)?.body {
        Instance::Curves(f) => Ok(f),
        other => Err(Failure::Usage(format!("{}: expected curves, found {}", path.display(), other.kind().name()))),
    }
}

fn load_valid_curves(path: &Path) -> Result<CurveFamily, Failure> {
    Ok(load_curves(path)?.validated()?)
}

fn load_drawing(path: &Path) -> Result<TopoDrawing, Failure> {
    match load(path)?.body {
        Instance::Drawing(d) => Ok(d),
        other => Err(Failure::Usage(format!("{}: expected a drawing, found {}", path.display(), other.kind().name()))),
    }
}

/// Graph of any instance: curves give their intersection graph and
/// drawings their abstract graph.
fn load_graph(path: &Path) -> Result<SimpleGraph, Failure> {
    Ok(match load(path)?.body {
        Instance::Curves(f) => intersection_graph(&f.validated()?)?,
        Instance::Graph(g) => g,
        Instance::Drawing(d) => d.graph(),
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn list(s: impl IntoIterator<Item = usize>) -> String {
    s.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn ids(f: &CurveFamily, s: &VSet) -> String {
    list(s.iter().map(|i| f.curves[i].id))
}

fn validate(path: &Path, svg_path: Option<&Path>, out: Out) -> Result<(), Failure> {
    let mut f = load_curves(path)?;
    let report = f.validate().clone();
    writeln!(out, "curves: {}", f.len())?;
    writeln!(out, "valid: {}", report.valid)?;
    writeln!(out, "intersecting pairs: {}", report.contacts.len())?;
    writeln!(out, "proper crossings: {}", report.proper_crossings)?;
    writeln!(out, "shared endpoints: {}", report.shared_endpoints.len())?;
    for v in &report.violations {
        writeln!(out, "violation: {v:?}")?;
    }
    if let Some(p) = svg_path {
        write_file(p, &svg::arrangement_svg(&f, None, &path.display().to_string()))?;
    }
    if report.valid {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} violations", report.violations.len())))
    }
}

fn graph(path: &Path, out_path: Option<&Path>, out: Out) -> Result<(), Failure> {
    let g = load_graph(path)?;
    writeln!(out, "vertices: {}", g.n())?;
    writeln!(out, "edges: {}", g.edge_count())?;
    writeln!(out, "density: {}", g.density())?;
    if let Some(p) = out_path {
        write_file(p, &format::serialize(&InstanceFile::new(Instance::Graph(g))))?;
    }
    Ok(())
}

fn partition(
    path: &Path,
    eps: Rational64,
    k: usize,
    cfg: OracleConfig,
    svg_path: Option<&Path>,
    out: Out,
) -> Result<(), Failure> {
    let g = load_graph(path)?;
    let outcome = regularity_partition(&g, eps, &cfg, k)?;
    let p = &outcome.partition;
    p.verify(&g)?;
    let sizes: Vec<usize> = p.blocks.iter().map(VSet::len).collect();
    writeln!(out, "vertices: {}", g.n())?;
    writeln!(out, "blocks: {}", p.k())?;
    writeln!(out, "block sizes: {}..={}", sizes.iter().min().unwrap_or(&0), sizes.iter().max().unwrap_or(&0))?;
    writeln!(out, "exceptional pairs: {}", p.exceptional_count())?;
    writeln!(out, "exceptional fraction: {} (eps = {eps})", p.exceptional_fraction())?;
    if let Some(t) = &outcome.trace {
        writeln!(out, "rounds: {} (fixed point {:?})", t.rounds.len(), t.fixed_point)?;
    }
    for (i, b) in p.blocks.iter().enumerate() {
        writeln!(out, "block {i}: {}", list(b.iter()))?;
    }
    if let Some(s) = svg_path {
        write_file(s, &svg::partition_heatmap_svg(p, &format!("K = {}", p.k())))?;
    }
    if p.exceptional_fraction() > eps {
        return Err(Failure::Check(format!("exceptional fraction {} exceeds {eps}", p.exceptional_fraction())));
    }
    Ok(())
}

fn rodl(path: &Path, eps: Rational64, cfg: OracleConfig, out: Out) -> Result<(), Failure> {
    let g = load_graph(path)?;
    let (s, trace) = rodl_extract(&g, eps, &cfg)?;
    writeln!(out, "levels: {}", trace.t)?;
    writeln!(out, "cell size: {}", trace.m_star)?;
    writeln!(out, "selected cells: {} ({})", trace.selected.len(), if trace.clique { "clique" } else { "independent" })?;
    writeln!(out, "size: {}", s.len())?;
    writeln!(out, "density: {}", g.induced_density(&s)?)?;
    writeln!(out, "vertices: {}", list(s.iter()))?;
    Ok(())
}

fn mighty(path: &Path, split: Option<usize>, cfg: OracleConfig, out: Out) -> Result<(), Failure> {
    let mut f = load_valid_curves(path)?;
    if let Some(k) = split {
        if k > f.len() {
            return Err(Failure::Usage(format!("split {k} exceeds {} curves", f.len())));
        }
        let colors = (0..f.len()).map(|i| if i < k { Color::Red } else { Color::Blue }).collect();
        f = f.with_colors(colors)?;
    }
    let colors = f.colors.clone().ok_or_else(|| Failure::Usage("curves have no colors; pass --red-blue-split".into()))?;
    let g = intersection_graph(&f)?;
    let a = g.vset((0..f.len()).filter(|&i| colors[i] == Color::Red));
    let b = g.vset((0..f.len()).filter(|&i| colors[i] == Color::Blue));
    if a.is_empty() || b.is_empty() {
        return Err(Failure::Usage("both colors need at least one curve".into()));
    }
    let MightyOutcome { pair, c_achieved, target_met } =
        if a.len() == b.len() { mighty_pair(&g, &a, &b, &cfg, Some(&f))? } else { unbalanced_mighty(&g, &a, &b, &cfg)? };
    writeln!(out, "red: {}, blue: {}", a.len(), b.len())?;
    writeln!(out, "status: {:?}", pair.status)?;
    writeln!(out, "method: {:?}", pair.method)?;
    writeln!(out, "sides: {} x {}", pair.a.len(), pair.b.len())?;
    writeln!(out, "fraction: {c_achieved} (target {}, met {target_met})", cfg.c_target)?;
    writeln!(out, "red side: {}", ids(&f, &pair.a))?;
    writeln!(out, "blue side: {}", ids(&f, &pair.b))?;
    Ok(())
}

fn separator(path: &Path, out: Out) -> Result<(), Failure> {
    let f = load_valid_curves(path)?;
    let g = intersection_graph(&f)?;
    let res = curve_separator(&f)?;
    res.verify(&g)?;
    writeln!(out, "curves: {}", f.len())?;
    writeln!(out, "crossings: {}", res.crossing_count_m)?;
    writeln!(out, "separator: {}", res.s0.len())?;
    writeln!(out, "sides: {} {}", res.v1.len(), res.v2.len())?;
    writeln!(out, "ratio: {:.4}", res.ratio())?;
    writeln!(out, "s0: {}", ids(&f, &res.s0))?;
    Ok(())
}

fn cutting(path: &Path, r: usize, seed: u64, out: Out) -> Result<(), Failure> {
    let f = load_valid_curves(path)?;
    let res = vertical_cutting(&f, r, seed)?;
    writeln!(out, "cells: {}", res.t)?;
    writeln!(out, "t/r^2: {}", res.c0())?;
    writeln!(out, "max crossing list: {} (n/r = {})", res.max_crossings(), Rational64::new(f.len() as i64, r as i64))?;
    writeln!(out, "attempts: {}", res.attempts)?;
    for (cell, crossing) in res.cells.iter().zip(&res.crossing_lists) {
        let bound = |b: Option<usize>| b.map_or("-".to_string(), |i| f.curves[i].id.to_string());
        writeln!(
            out,
            "cell {} {} {} {}: {}",
            format_rational(&cell.x0),
            format_rational(&cell.x1),
            bound(cell.lower),
            bound(cell.upper),
            list(crossing.iter().copied())
        )?;
    }
    Ok(())
}

fn sweep(colors: &str, out: Out) -> Result<(), Failure> {
    let seq = parse_colors(colors)?;
    let sel = sweep_select(&seq)?;
    writeln!(out, "winner: {}", sel.winner)?;
    writeln!(out, "reds: {}", list(sel.reds.iter().copied()))?;
    writeln!(out, "blues: {}", list(sel.blues.iter().copied()))?;
    if !sel.holds_for(&seq) {
        return Err(Failure::Check("selection does not split the colors".into()));
    }
    Ok(())
}

fn topo(cmd: TopoCommand, out: Out) -> Result<(), Failure> {
    match cmd {
        TopoCommand::Validate { file } => {
            let d = load_drawing(&file)?;
            let rep = validate_simple(&d);
            writeln!(out, "vertices: {}", d.vertex_count())?;
            writeln!(out, "edges: {}", d.edge_count())?;
            writeln!(out, "simple: {}", rep.valid)?;
            for v in &rep.violations {
                writeln!(out, "violation: {v:?}")?;
            }
            if !rep.valid {
                return Err(Failure::Check(format!("{} violations", rep.violations.len())));
            }
        }
        TopoCommand::Disjoint { file, k, oracle, svg: svg_path } => {
            let d = load_drawing(&file)?;
            let set = disjoint_matching(&d, k, oracle.into())?;
            if !d.pairwise_disjoint(&set) {
                return Err(Failure::Check("returned edges are not pairwise disjoint".into()));
            }
            writeln!(out, "disjoint edges: {}", set.len())?;
            for &e in &set {
                writeln!(out, "edge {e}: {} {}", d.edges[e].u, d.edges[e].v)?;
            }
            if let Some(p) = svg_path {
                write_file(&p, &svg::drawing_svg(&d, &set, &file.display().to_string()))?;
            }
        }
        TopoCommand::Oddcr { file } => {
            let d = load_drawing(&file)?;
            writeln!(out, "odd crossing pairs: {}", odd_crossing_count(&d))?;
        }
        TopoCommand::Bisect { file, seed } => {
            let d = load_drawing(&file)?;
            let r = bisect_inequality_report(&d, seed.seed)?;
            writeln!(out, "vertices: {}", r.n)?;
            writeln!(out, "bisection width: {} ({})", r.b_found, if r.exact { "exact" } else { "heuristic" })?;
            writeln!(out, "odd crossing pairs: {}", r.odd_cr)?;
            writeln!(out, "sum of squared degrees: {}", r.sum_deg_sq)?;
            writeln!(out, "ratio: {:.4}", r.ratio)?;
        }
        TopoCommand::Bound { file, k, c2 } => {
            let d = load_drawing(&file)?;
            if k < 2 {
                return Err(Failure::Usage("--k must be at least 2".into()));
            }
            let bound = edge_bound(d.vertex_count().max(2), k, c2);
            let admits = bound.admits(d.edge_count());
            writeln!(out, "edges: {}", d.edge_count())?;
            writeln!(out, "log2 bound: {:.4}", bound.log2())?;
            writeln!(out, "within bound: {admits}")?;
            if !admits {
                // Exceeding the bound is only a contradiction without k disjoint edges.
                match disjoint_matching(&d, Some(k), Mode::Exact) {
                    Ok(set) if set.len() < k => {
                        return Err(Failure::Check(format!("no {k} disjoint edges yet the bound fails")));
                    }
                    Ok(_) => writeln!(out, "{k} disjoint edges exist")?,
                    Err(e) => writeln!(out, "disjoint edges not checked: {e}")?,
                }
            }
        }
        TopoCommand::Grid { file, k } => {
            let d = load_drawing(&file)?;
            match find_natural_grid(&d, k)? {
                Some((a, b)) => {
                    writeln!(out, "grid: found")?;
                    writeln!(out, "first: {}", list(a))?;
                    writeln!(out, "second: {}", list(b))?;
                }
                None => writeln!(out, "grid: none")?,
            }
        }
    }
    Ok(())
}

fn generate(cmd: GenCommand, seed: u64, path: Option<&Path>, out: Out) -> Result<(), Failure> {
    let (body, generator, seeded) = match cmd {
        GenCommand::Segments { n, bbox, max_len } => {
            let p = SegmentParams { n, seed, bbox: BBox::square(bbox), max_len };
            let mut params = vec![("n", n.to_string()), ("bbox", bbox.to_string())];
            if let Some(m) = max_len {
                params.push(("max_len", m.to_string()));
            }
            (Instance::Curves(instances::random_segments(&p)?), Generator::new("segments", &params), true)
        }
        GenCommand::Halfgraph { n } => (
            Instance::Curves(instances::gen_halfgraph_segments(n)?),
            Generator::new("halfgraph", &[("n", n.to_string())]),
            false,
        ),
        GenCommand::Wiring { n } => (
            Instance::Curves(instances::gen_wiring_diagram(n, seed)?),
            Generator::new("wiring", &[("n", n.to_string())]),
            true,
        ),
        GenCommand::Grounded { n, bent, shape } => {
            let (s, name) = match shape {
                Shape::Random => (GroundedShape::Random, "random"),
                Shape::Nested => (GroundedShape::Nested, "nested"),
                Shape::Twist => (GroundedShape::Twist, "twist"),
            };
            let f = instances::gen_grounded_shape(n, seed, !bent, s)?;
            let params = [("n", n.to_string()), ("monotone", (!bent).to_string()), ("shape", name.to_string())];
            (Instance::Curves(f), Generator::new("grounded", &params), true)
        }
        GenCommand::Convex { n } => (
            Instance::Drawing(instances::convex_drawing(n)?),
            Generator::new("convex", &[("n", n.to_string())]),
            false,
        ),
    };
    let mut file = InstanceFile::new(body).with_generator(generator);
    if seeded {
        file = file.with_seed(seed);
    }
    let text = format::serialize(&file);
    match path {
        Some(p) => write_file(p, &text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}
