use std::fs;
use std::io::Write;
use std::path::Path;

use psreg::format::{Instance, InstanceFile};
use psreg::graph::intersection_graph;
use psreg::topo::{odd_crossing_count, validate_simple};

use crate::commands::load;
use crate::failure::Failure;

const COLUMNS: [&str; 10] = ["file", "kind", "seed", "generator", "size", "edges", "valid", "violations", "crossings", "density"];

/// One row per instance file, sorted by name. Files that fail to parse get
/// a row with `kind = error` and the message in `generator`.
pub fn run(dir: &Path, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    let mut names: Vec<_> = fs::read_dir(dir)
        .map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok())
        .filter(|e| e.file_type().is_ok_and(|t| t.is_file()))
        .map(|e| e.path())
        .collect();
    names.sort();
    let sink: Box<dyn Write + '_> = match path {
        Some(p) => Box::new(fs::File::create(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?),
        None => Box::new(out),
    };
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(COLUMNS)?;
    for p in names {
        let name = p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let row = match load(&p) {
            Ok(file) => row(&name, &file),
            Err(e) => {
                let mut r = vec![String::new(); COLUMNS.len()];
                (r[0], r[1], r[3]) = (name, "error".into(), e.to_string());
                r
            }
        };
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn row(name: &str, file: &InstanceFile) -> Vec<String> {
    let seed = file.header.seed.map(|s| s.to_string()).unwrap_or_default();
    let generator = file.header.generator.as_ref().map(|g| g.name.clone()).unwrap_or_default();
    let (size, edges, valid, violations, crossings, density) = match &file.body {
        Instance::Curves(f) => {
            let mut f = f.clone();
            let rep = f.validate().clone();
            let (edges, density) = match intersection_graph(&f) {
                Ok(g) => (g.edge_count(), g.density().to_string()),
                Err(_) => (rep.contacts.len(), String::new()),
            };
            (f.len(), edges, rep.valid, rep.violations.len(), rep.proper_crossings.to_string(), density)
        }
        Instance::Graph(g) => (g.n(), g.edge_count(), true, 0, String::new(), g.density().to_string()),
        Instance::Drawing(d) => {
            let rep = validate_simple(d);
            let g = d.graph();
            (d.vertex_count(), d.edge_count(), rep.valid, rep.violations.len(), odd_crossing_count(d).to_string(), g.density().to_string())
        }
    };
    vec![
        name.to_string(),
        file.kind().name().to_string(),
        seed,
        generator,
        size.to_string(),
        edges.to_string(),
        valid.to_string(),
        violations.to_string(),
        crossings,
        density,
    ]
}
