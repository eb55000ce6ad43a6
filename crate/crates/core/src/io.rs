//! Stable serialization: wall-space documents, graph and complex exports,
//! DOT rendering, and the raw-graph schema used by `verify` and `roundtrip`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cubecomplex::CubeComplex;
use crate::cubulation::MedianGraph;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::wallspace::{Note, PointSet, RawWall, RawWallSpace, WallSpace};

/// Wall-space document: point names plus one side per wall, the complement
/// and the trivial wall implied.
#[derive(Serialize, Deserialize)]
struct WallSpaceDoc {
    points: Vec<String>,
    walls: Vec<Vec<String>>,
}

pub fn parse_raw_wallspace(text: &str) -> Result<RawWallSpace> {
    let doc: WallSpaceDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let index: BTreeMap<&str, usize> = doc
        .points
        .iter()
        .enumerate()
        .map(|(i, name)| (name.as_str(), i))
        .collect();
    let mut walls = Vec::with_capacity(doc.walls.len());
    for side in &doc.walls {
        let mut set = PointSet::EMPTY;
        for name in side {
            let &x = index
                .get(name.as_str())
                .ok_or_else(|| Error::Parse(format!("unknown point name {name:?} in a wall")))?;
            set = set.union(PointSet::singleton(x));
        }
        walls.push(RawWall::OneSided(set));
    }
    Ok(RawWallSpace {
        names: doc.points,
        walls,
    })
}

/// Parse and build; validation violations are rendered into a parse error.
pub fn parse_wallspace(text: &str) -> Result<(WallSpace, Vec<Note>)> {
    let raw = parse_raw_wallspace(text)?;
    raw.build().map_err(|report| {
        let lines: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        Error::Parse(lines.join("; "))
    })
}

/// Export in the same schema: side0 per nontrivial wall, in wall order.
pub fn export_wallspace(space: &WallSpace) -> String {
    let doc = WallSpaceDoc {
        points: space.point_names().to_vec(),
        walls: space
            .walls()
            .iter()
            .skip(1)
            .map(|wall| {
                wall.side0
                    .iter()
                    .map(|x| space.point_name(x).to_string())
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

#[derive(Serialize, Deserialize)]
struct VertexRecord {
    index: usize,
    bits: String,
    principal: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct EdgeRecord {
    u: usize,
    v: usize,
    wall: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<VertexRecord>,
    edges: Vec<EdgeRecord>,
}

pub fn export_graph_json(g: &MedianGraph) -> String {
    let doc = GraphDoc {
        vertices: (0..g.num_vertices())
            .map(|v| VertexRecord {
                index: v,
                bits: g.space().bitstring(&g.vertices()[v]),
                principal: g.principal_point(v).map(|x| g.space().point_name(x).into()),
            })
            .collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeRecord {
                u: e.u,
                v: e.v,
                wall: e.wall,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn export_graph_dot(g: &MedianGraph) -> String {
    let mut out = String::from("graph cubulation {\n");
    for v in 0..g.num_vertices() {
        let label = match g.principal_point(v) {
            Some(x) => format!("σ_{}", g.space().point_name(x)),
            None => g.space().bitstring(&g.vertices()[v]),
        };
        writeln!(out, "  v{v} [label=\"{label}\"];").unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.u, e.v, e.wall).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct CubeRecord {
    base: String,
    walls: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ComplexDoc {
    f_vector: Vec<usize>,
    euler_characteristic: i64,
    dimension: usize,
    cubes: BTreeMap<String, Vec<CubeRecord>>,
}

pub fn export_complex_json(g: &MedianGraph, complex: &CubeComplex) -> String {
    let mut cubes = BTreeMap::new();
    for k in 2..=complex.dim() {
        let records: Vec<CubeRecord> = complex
            .cubes_of_dim(k)
            .iter()
            .map(|c| CubeRecord {
                base: g.space().bitstring(&g.vertices()[c.base]),
                walls: c.walls.to_vec(),
            })
            .collect();
        cubes.insert(k.to_string(), records);
    }
    let doc = ComplexDoc {
        f_vector: complex.f_vector().to_vec(),
        euler_characteristic: complex.euler_characteristic(),
        dimension: complex.dim(),
        cubes,
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

/// OFF-like dump of the square skeleton for external viewers. Vertex
/// coordinates are the bits of the first three nontrivial walls.
pub fn export_squares_off(g: &MedianGraph, complex: &CubeComplex) -> String {
    let squares = complex.cubes_of_dim(2);
    let mut out = String::from("OFF\n");
    writeln!(out, "{} {} 0", g.num_vertices(), squares.len()).unwrap();
    for o in g.vertices() {
        let coord = |i: usize| if o.bit(i) { 1 } else { 0 };
        let w = g.space().num_walls();
        writeln!(
            out,
            "{} {} {}",
            if w > 1 { coord(1) } else { 0 },
            if w > 2 { coord(2) } else { 0 },
            if w > 3 { coord(3) } else { 0 }
        )
        .unwrap();
    }
    for square in squares {
        let walls = square.walls.to_vec();
        let base = g.vertices()[square.base].bits();
        let corner = |delta: u64| {
            g.vertex_index(&g.space().orientation_from_bits(base | delta))
                .expect("square corners are vertices")
        };
        let (i, j) = (walls[0], walls[1]);
        // corners in cyclic order
        writeln!(
            out,
            "4 {} {} {} {}",
            corner(0),
            corner(1 << i),
            corner((1 << i) | (1 << j)),
            corner(1 << j)
        )
        .unwrap();
    }
    out
}

/// Raw-graph document: vertex names plus edges as name pairs.
#[derive(Serialize, Deserialize)]
struct RawGraphDoc {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

pub fn parse_graph(text: &str) -> Result<(SimpleGraph, Vec<String>)> {
    let doc: RawGraphDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let index: BTreeMap<&str, usize> = doc
        .vertices
        .iter()
        .enumerate()
        .map(|(i, name)| (name.as_str(), i))
        .collect();
    if index.len() != doc.vertices.len() {
        return Err(Error::Parse("duplicate vertex name".into()));
    }
    let mut g = SimpleGraph::new(doc.vertices.len());
    for (a, b) in &doc.edges {
        let &u = index
            .get(a.as_str())
            .ok_or_else(|| Error::Parse(format!("unknown vertex name {a:?} in an edge")))?;
        let &v = index
            .get(b.as_str())
            .ok_or_else(|| Error::Parse(format!("unknown vertex name {b:?} in an edge")))?;
        g.add_edge(u, v)?;
    }
    Ok((g, doc.vertices))
}

/// Sniff which schema a document uses.
pub fn looks_like_graph(text: &str) -> bool {
    serde_json::from_str::<serde_json::Value>(text)
        .ok()
        .and_then(|v| v.get("vertices").cloned())
        .is_some()
}

/// Action document: permutations in cycle notation over point names.
#[derive(Serialize, Deserialize)]
struct ActionDoc {
    generators: Vec<String>,
}

pub fn parse_action_generators(text: &str, space: &WallSpace) -> Result<Vec<Vec<usize>>> {
    let doc: ActionDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.generators
        .iter()
        .map(|s| parse_cycles(s, space))
        .collect()
}

/// Parse cycle notation like "(a b c)(d e)" into a point permutation.
pub fn parse_cycles(text: &str, space: &WallSpace) -> Result<Vec<usize>> {
    let n = space.num_points();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut moved = vec![false; n];
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "()" {
        return Ok(perm);
    }
    if !trimmed.starts_with('(') || !trimmed.ends_with(')') {
        return Err(Error::Parse(format!("malformed cycle notation {text:?}")));
    }
    for cycle in trimmed[1..trimmed.len() - 1].split(")(") {
        let members: Vec<usize> = cycle
            .split_whitespace()
            .map(|name| {
                space
                    .point_index(name)
                    .ok_or_else(|| Error::Parse(format!("unknown point name {name:?} in a cycle")))
            })
            .collect::<Result<_>>()?;
        for &x in &members {
            if moved[x] {
                return Err(Error::Parse(format!(
                    "point {:?} appears in two cycles",
                    space.point_name(x)
                )));
            }
            moved[x] = true;
        }
        for (pos, &x) in members.iter().enumerate() {
            perm[x] = members[(pos + 1) % members.len()];
        }
    }
    Ok(perm)
}

/// Morphism document: source/target spaces inline plus the point map.
#[derive(Serialize, Deserialize)]
struct MorphismDoc {
    map: Vec<(String, String)>,
}

pub fn parse_point_map(
    text: &str,
    source: &WallSpace,
    target: &WallSpace,
) -> Result<Vec<usize>> {
    let doc: MorphismDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut map = vec![usize::MAX; source.num_points()];
    for (from, to) in &doc.map {
        let x = source
            .point_index(from)
            .ok_or_else(|| Error::Parse(format!("unknown source point {from:?}")))?;
        let y = target
            .point_index(to)
            .ok_or_else(|| Error::Parse(format!("unknown target point {to:?}")))?;
        map[x] = y;
    }
    if let Some(x) = map.iter().position(|&y| y == usize::MAX) {
        return Err(Error::Parse(format!(
            "source point {:?} has no image",
            source.point_name(x)
        )));
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubulation::cubulate;
    use crate::fixtures;

    #[test]
    fn parse_p3_document() {
        let text = r#"{"points": ["a", "b", "c"], "walls": [["a"], ["a", "b"]]}"#;
        let (space, notes) = parse_wallspace(text).unwrap();
        assert_eq!(space, fixtures::p3());
        assert_eq!(notes, vec![Note::TrivialWallInserted]);
    }

    #[test]
    fn unknown_point_name_is_a_parse_error() {
        let text = r#"{"points": ["a"], "walls": [["z"]]}"#;
        match parse_wallspace(text) {
            Err(Error::Parse(msg)) => assert!(msg.contains("z")),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_wall_dedups_with_note() {
        let text = r#"{"points": ["a", "b", "c"], "walls": [["a"], ["a"], ["a", "b"]]}"#;
        let (space, notes) = parse_wallspace(text).unwrap();
        assert_eq!(space, fixtures::p3());
        assert!(notes
            .iter()
            .any(|n| matches!(n, Note::DuplicateWallRemoved { input_index: 1 })));
    }

    #[test]
    fn roundtrip_fixtures() {
        for space in [fixtures::pt(), fixtures::two(), fixtures::p3(), fixtures::hex6()] {
            let exported = export_wallspace(&space);
            let (reparsed, _) = parse_wallspace(&exported).unwrap();
            assert_eq!(reparsed, space);
            // Byte-stable export of the re-parse.
            assert_eq!(export_wallspace(&reparsed), exported);
        }
    }

    #[test]
    fn dot_labels() {
        let g = cubulate(&fixtures::p3());
        let dot = export_graph_dot(&g);
        assert!(dot.contains("σ_a"));
        assert!(dot.contains("label=\"1\""));
    }

    #[test]
    fn graph_json_has_principal_names() {
        let g = cubulate(&fixtures::hex6());
        let json = export_graph_json(&g);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["vertices"].as_array().unwrap().len(), 8);
        assert_eq!(doc["edges"].as_array().unwrap().len(), 12);
    }

    #[test]
    fn parse_raw_graph() {
        let text = r#"{"vertices": ["x", "y", "z"], "edges": [["x", "y"], ["y", "z"]]}"#;
        let (g, names) = parse_graph(text).unwrap();
        assert_eq!(g.num_vertices(), 3);
        assert_eq!(g.num_edges(), 2);
        assert_eq!(names, vec!["x", "y", "z"]);
        assert!(looks_like_graph(text));
        assert!(!looks_like_graph(r#"{"points": ["a"], "walls": []}"#));
    }

    #[test]
    fn parse_cycle_notation() {
        let hex = fixtures::hex6();
        let rot = parse_cycles("(0 1 2 3 4 5)", &hex).unwrap();
        assert_eq!(rot, vec![1, 2, 3, 4, 5, 0]);
        let refl = parse_cycles("(0 1)(2 5)(3 4)", &hex).unwrap();
        assert_eq!(refl, vec![1, 0, 5, 4, 3, 2]);
        assert!(parse_cycles("(0 9)", &hex).is_err());
        assert_eq!(parse_cycles("()", &hex).unwrap(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn off_dump_of_hex6_squares() {
        let g = cubulate(&fixtures::hex6());
        let complex = crate::cubecomplex::fill_cubes(&g);
        let off = export_squares_off(&g, &complex);
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("8 6 0"));
    }
}
