//! Three operations for the static page in `www/`: draw a generated curve
//! family, partition its intersection graph, and run the red/blue sweep.
//! The `render_*` functions are plain Rust; the `#[wasm_bindgen]` wrappers
//! only convert errors.

use num_rational::Rational64;
use psreg::graph::intersection_graph;
use psreg::homog::OracleConfig;
use psreg::instances::{self, BBox, SegmentParams};
use psreg::regularity::regularity_partition;
use psreg::sweep::{parse_colors, sweep_select};
use psreg::{svg, CurveFamily};
use wasm_bindgen::prelude::*;

/// Keeps the exact kernels responsive in a browser tab.
pub const MAX_CURVES: usize = 80;

fn family(generator: &str, n: usize, seed: u64) -> Result<CurveFamily, String> {
    if n == 0 || n > MAX_CURVES {
        return Err(format!("n must lie in 1..={MAX_CURVES}"));
    }
    let f = match generator {
        "segments" => instances::random_segments(&SegmentParams { n, seed, bbox: BBox::square(100), max_len: None }),
        "short" => instances::random_segments(&SegmentParams { n, seed, bbox: BBox::square(100), max_len: Some(25) }),
        "wiring" => instances::gen_wiring_diagram(n.max(2), seed),
        "grounded" => instances::gen_grounded(n, seed, true),
        "halfgraph" => instances::gen_halfgraph_segments(n.div_ceil(2)),
        other => return Err(format!("unknown generator {other:?}")),
    };
    f.map_err(|e| e.to_string())
}

/// SVG of a generated family with its proper crossings marked, followed by
/// a one-line summary after a NUL separator.
pub fn render_arrangement(generator: &str, n: usize, seed: u64) -> Result<String, String> {
    let f = family(generator, n, seed)?;
    let g = intersection_graph(&f).map_err(|e| e.to_string())?;
    let crossings = f.report().map_or(0, |r| r.proper_crossings);
    let title = format!("{generator}, n = {}, seed {seed}", f.len());
    let summary = format!("{} curves, {} intersecting pairs, {crossings} proper crossings", f.len(), g.edge_count());
    Ok(format!("{}\0{summary}", svg::arrangement_svg(&f, None, &title)))
}

/// Partition heatmap of the family's intersection graph, then the curves
/// colored by block, each followed by a NUL separator and a summary.
pub fn render_partition(generator: &str, n: usize, seed: u64, eps: &str, k: usize) -> Result<String, String> {
    let eps: Rational64 = eps.parse().map_err(|_| format!("eps {eps:?} is not a fraction"))?;
    let f = family(generator, n, seed)?;
    let g = intersection_graph(&f).map_err(|e| e.to_string())?;
    let cfg = OracleConfig { seed, ..OracleConfig::default() };
    let outcome = regularity_partition(&g, eps, &cfg, k).map_err(|e| e.to_string())?;
    let p = outcome.partition;
    let classes = p.block_of();
    let summary = format!(
        "K = {}, {} exceptional pairs, fraction {} (eps = {eps})",
        p.k(),
        p.exceptional_count(),
        p.exceptional_fraction()
    );
    Ok(format!(
        "{}\0{}\0{summary}",
        svg::partition_heatmap_svg(&p, &summary),
        svg::arrangement_svg(&f, Some(&classes), "curves by block")
    ))
}

/// Selected positions of the winning color followed by the other color,
/// one line each.
pub fn render_sweep(colors: &str) -> Result<String, String> {
    let seq = parse_colors(colors).map_err(|e| e.to_string())?;
    let sel = sweep_select(&seq).map_err(|e| e.to_string())?;
    let join = |v: &[usize]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
    Ok(format!("winner: {}\nred: {}\nblue: {}\nholds: {}", sel.winner, join(&sel.reds), join(&sel.blues), sel.holds_for(&seq)))
}

#[wasm_bindgen]
pub fn arrangement(generator: &str, n: usize, seed: u64) -> Result<String, JsError> {
    render_arrangement(generator, n, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn partition(generator: &str, n: usize, seed: u64, eps: &str, k: usize) -> Result<String, JsError> {
    render_partition(generator, n, seed, eps, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn sweep(colors: &str) -> Result<String, JsError> {
    render_sweep(colors).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wiring_arrangement_marks_all_crossings() {
        let out = render_arrangement("wiring", 6, 3).unwrap();
        let (svg, summary) = out.split_once('\0').unwrap();
        assert_eq!(svg.matches("<circle").count(), 15);
        assert_eq!(summary, "6 curves, 15 intersecting pairs, 15 proper crossings");
    }

    #[test]
    fn partition_has_three_parts() {
        let out = render_partition("segments", 40, 1, "1/5", 20).unwrap();
        let parts: Vec<&str> = out.split('\0').collect();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0].matches("<rect x").count(), 400);
        assert!(parts[2].starts_with("K = 20"));
    }

    #[test]
    fn sweep_reports_selection() {
        let out = render_sweep("RRBB").unwrap();
        assert!(out.starts_with("winner: RedFirst"));
        assert!(out.ends_with("holds: true"));
    }

    #[test]
    fn bad_inputs_are_errors() {
        assert!(render_arrangement("spiral", 5, 0).is_err());
        assert!(render_arrangement("segments", MAX_CURVES + 1, 0).is_err());
        assert!(render_partition("segments", 10, 0, "x", 20).is_err());
        assert!(render_sweep("RXB").is_err());
    }
}
