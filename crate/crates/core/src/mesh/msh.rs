//! Reader and writer for the Gmsh MSH 2.2 ASCII subset: $Nodes and $Elements
//! with element types 1 (2-node line, tagged boundary) and 2 (3-node
//! triangle). Physical tags are the first tag entry. Unknown sections are
//! skipped. Node z-coordinates must vanish to 1e-9.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use super::{Mesh, TaggedEdge};
use crate::error::{Error, Result};

struct Lines<'a> {
    inner: std::str::Lines<'a>,
    number: usize,
}

impl<'a> Lines<'a> {
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for line in self.inner.by_ref() {
            self.number += 1;
            let trimmed = line.trim();
            if !trimmed.is_empty() {
                return Some((self.number, trimmed));
            }
        }
        None
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::MeshParse { line, msg: msg.into() }
}

pub fn load_gmsh(path: impl AsRef<Path>) -> Result<Mesh> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_msh(&text)
}

pub(crate) fn parse_msh(text: &str) -> Result<Mesh> {
    let mut lines = Lines { inner: text.lines(), number: 0 };

    let mut node_ids: HashMap<u64, usize> = HashMap::new();
    let mut vertices: Vec<[f64; 2]> = Vec::new();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut region_tags: Vec<i32> = Vec::new();
    let mut boundary_edges: Vec<TaggedEdge> = Vec::new();
    let mut seen_format = false;
    let mut seen_nodes = false;

    while let Some((ln, line)) = lines.next_content() {
        match line {
            "$MeshFormat" => {
                let (ln, header) = lines
                    .next_content()
                    .ok_or_else(|| parse_err(ln, "unterminated $MeshFormat"))?;
                let mut parts = header.split_whitespace();
                let version = parts.next().unwrap_or("");
                let file_type = parts.next().unwrap_or("");
                if !version.starts_with("2.2") {
                    return Err(parse_err(ln, format!("unsupported MSH version '{version}' (need 2.2)")));
                }
                if file_type != "0" {
                    return Err(parse_err(ln, "binary MSH files are not supported"));
                }
                expect_section_end(&mut lines, "$EndMeshFormat")?;
                seen_format = true;
            }
            "$Nodes" => {
                let (cln, count) = lines
                    .next_content()
                    .ok_or_else(|| parse_err(ln, "unterminated $Nodes"))?;
                let count: usize = count
                    .parse()
                    .map_err(|_| parse_err(cln, "node count must be an integer"))?;
                for _ in 0..count {
                    let (nln, node) = lines
                        .next_content()
                        .ok_or_else(|| parse_err(cln, "truncated $Nodes section"))?;
                    let fields: Vec<&str> = node.split_whitespace().collect();
                    if fields.len() != 4 {
                        return Err(parse_err(nln, "node records need 'id x y z'"));
                    }
                    let id: u64 = fields[0]
                        .parse()
                        .map_err(|_| parse_err(nln, "node id must be an integer"))?;
                    let x: f64 = fields[1].parse().map_err(|_| parse_err(nln, "bad x coordinate"))?;
                    let y: f64 = fields[2].parse().map_err(|_| parse_err(nln, "bad y coordinate"))?;
                    let z: f64 = fields[3].parse().map_err(|_| parse_err(nln, "bad z coordinate"))?;
                    if z.abs() > 1e-9 {
                        return Err(parse_err(nln, format!("node {id} has z = {z}; 2D meshes need |z| <= 1e-9")));
                    }
                    if node_ids.insert(id, vertices.len()).is_some() {
                        return Err(parse_err(nln, format!("duplicate node id {id}")));
                    }
                    vertices.push([x, y]);
                }
                expect_section_end(&mut lines, "$EndNodes")?;
                seen_nodes = true;
            }
            "$Elements" => {
                if !seen_nodes {
                    return Err(parse_err(ln, "$Elements before $Nodes"));
                }
                let (cln, count) = lines
                    .next_content()
                    .ok_or_else(|| parse_err(ln, "unterminated $Elements"))?;
                let count: usize = count
                    .parse()
                    .map_err(|_| parse_err(cln, "element count must be an integer"))?;
                for _ in 0..count {
                    let (eln, elem) = lines
                        .next_content()
                        .ok_or_else(|| parse_err(cln, "truncated $Elements section"))?;
                    let fields: Vec<&str> = elem.split_whitespace().collect();
                    if fields.len() < 3 {
                        return Err(parse_err(eln, "element records need 'id type ntags ...'"));
                    }
                    let etype: u32 = fields[1]
                        .parse()
                        .map_err(|_| parse_err(eln, "element type must be an integer"))?;
                    let ntags: usize = fields[2]
                        .parse()
                        .map_err(|_| parse_err(eln, "tag count must be an integer"))?;
                    let tags = &fields[3..];
                    if tags.len() < ntags {
                        return Err(parse_err(eln, "fewer tag fields than declared"));
                    }
                    let nodes = &tags[ntags..];
                    let physical: Option<i32> = if ntags > 0 {
                        Some(tags[0].parse().map_err(|_| parse_err(eln, "bad physical tag"))?)
                    } else {
                        None
                    };
                    let resolve = |id_str: &str| -> Result<usize> {
                        let id: u64 = id_str
                            .parse()
                            .map_err(|_| parse_err(eln, "node reference must be an integer"))?;
                        node_ids
                            .get(&id)
                            .copied()
                            .ok_or_else(|| parse_err(eln, format!("unknown node id {id}")))
                    };
                    match etype {
                        1 => {
                            if nodes.len() != 2 {
                                return Err(parse_err(eln, "2-node line needs exactly 2 nodes"));
                            }
                            let tag = physical.ok_or_else(|| {
                                parse_err(eln, "boundary line element lacks a physical tag")
                            })?;
                            boundary_edges.push(TaggedEdge {
                                vertices: [resolve(nodes[0])?, resolve(nodes[1])?],
                                tag,
                            });
                        }
                        2 => {
                            if nodes.len() != 3 {
                                return Err(parse_err(eln, "3-node triangle needs exactly 3 nodes"));
                            }
                            triangles.push([resolve(nodes[0])?, resolve(nodes[1])?, resolve(nodes[2])?]);
                            region_tags.push(physical.unwrap_or(0));
                        }
                        other => {
                            return Err(parse_err(eln, format!("unsupported element type {other}")));
                        }
                    }
                }
                expect_section_end(&mut lines, "$EndElements")?;
            }
            section if section.starts_with('$') && !section.starts_with("$End") => {
                // skip unknown sections such as $PhysicalNames
                let end = format!("$End{}", &section[1..]);
                loop {
                    match lines.next_content() {
                        Some((_, l)) if l == end => break,
                        Some(_) => continue,
                        None => return Err(parse_err(ln, format!("unterminated section {section}"))),
                    }
                }
            }
            other => {
                return Err(parse_err(ln, format!("unexpected content '{other}'")));
            }
        }
    }

    if !seen_format {
        return Err(parse_err(0, "missing $MeshFormat section"));
    }
    if triangles.is_empty() {
        return Err(parse_err(0, "mesh contains no triangles"));
    }
    Mesh::new(vertices, triangles, boundary_edges, region_tags)
}

fn expect_section_end(lines: &mut Lines, end: &str) -> Result<()> {
    match lines.next_content() {
        Some((_, l)) if l == end => Ok(()),
        Some((ln, other)) => Err(parse_err(ln, format!("expected {end}, found '{other}'"))),
        None => Err(parse_err(0, format!("missing {end}"))),
    }
}

/// Write a mesh in the same MSH 2.2 ASCII subset the reader accepts.
pub fn write_gmsh(mesh: &Mesh, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::new();
    out.push_str("$MeshFormat\n2.2 0 8\n$EndMeshFormat\n$Nodes\n");
    out.push_str(&format!("{}\n", mesh.n_vertices()));
    for (i, v) in mesh.vertices.iter().enumerate() {
        out.push_str(&format!("{} {} {} 0\n", i + 1, v[0], v[1]));
    }
    out.push_str("$EndNodes\n$Elements\n");
    out.push_str(&format!("{}\n", mesh.boundary_edges.len() + mesh.n_triangles()));
    let mut id = 1usize;
    for e in &mesh.boundary_edges {
        out.push_str(&format!(
            "{} 1 2 {} {} {} {}\n",
            id,
            e.tag,
            e.tag,
            e.vertices[0] + 1,
            e.vertices[1] + 1
        ));
        id += 1;
    }
    for (k, tri) in mesh.triangles.iter().enumerate() {
        let tag = mesh.region_tags[k].max(1);
        out.push_str(&format!(
            "{} 2 2 {} {} {} {} {}\n",
            id,
            tag,
            tag,
            tri[0] + 1,
            tri[1] + 1,
            tri[2] + 1
        ));
        id += 1;
    }
    out.push_str("$EndElements\n");
    fs::write(path, out).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{build_connectivity, structured_rectangle, StructuredSpec};

    /// Hand-written two-triangle unit square, anti-diagonal split.
    pub(crate) const TWO_TRIANGLE_SQUARE: &str = "\
$MeshFormat
2.2 0 8
$EndMeshFormat
$Nodes
4
1 0 0 0
2 1 0 0
3 0 1 0
4 1 1 0
$EndNodes
$Elements
6
1 1 2 3 3 1 2
2 1 2 2 2 2 4
3 1 2 4 4 4 3
4 1 2 1 1 3 1
5 2 2 1 1 1 2 3
6 2 2 1 1 2 4 3
$EndElements
";

    #[test]
    fn two_triangle_fixture_loads_with_exact_area() {
        let mesh = parse_msh(TWO_TRIANGLE_SQUARE).unwrap();
        assert_eq!(mesh.n_vertices(), 4);
        assert_eq!(mesh.n_triangles(), 2);
        assert_eq!(mesh.boundary_edges.len(), 4);
        assert_eq!(mesh.total_area(), 1.0);
    }

    #[test]
    fn clockwise_triangle_is_reoriented_on_load() {
        let text = TWO_TRIANGLE_SQUARE.replace("5 2 2 1 1 1 2 3", "5 2 2 1 1 1 3 2");
        let mesh = parse_msh(&text).unwrap();
        assert!(mesh.triangle_area(0) > 0.0);
        assert_eq!(mesh.total_area(), 1.0);
    }

    #[test]
    fn untagged_line_element_rejected_with_line_number() {
        let text = TWO_TRIANGLE_SQUARE.replace("1 1 2 3 3 1 2", "1 1 0 1 2");
        let err = parse_msh(&text).unwrap_err();
        match err {
            Error::MeshParse { line, msg } => {
                assert_eq!(line, 13);
                assert!(msg.contains("physical tag"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unsupported_element_type_rejected() {
        let text = TWO_TRIANGLE_SQUARE.replace("5 2 2 1 1 1 2 3", "5 4 2 1 1 1 2 3");
        assert!(matches!(parse_msh(&text), Err(Error::MeshParse { .. })));
    }

    #[test]
    fn nonzero_z_rejected() {
        let text = TWO_TRIANGLE_SQUARE.replace("4 1 1 0", "4 1 1 0.001");
        assert!(parse_msh(&text).is_err());
    }

    #[test]
    fn physical_names_section_skipped() {
        let text = TWO_TRIANGLE_SQUARE.replace(
            "$Nodes",
            "$PhysicalNames\n1\n1 1 \"wall\"\n$EndPhysicalNames\n$Nodes",
        );
        assert!(parse_msh(&text).is_ok());
    }

    #[test]
    fn structured_round_trip_through_msh() {
        let mesh = structured_rectangle(&StructuredSpec::new(3, 2, 0.3, 0.2)).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("grid.msh");
        write_gmsh(&mesh, &path).unwrap();
        let reloaded = load_gmsh(&path).unwrap();
        assert_eq!(reloaded.n_triangles(), mesh.n_triangles());
        assert_eq!(reloaded.boundary_edges.len(), mesh.boundary_edges.len());
        assert!((reloaded.total_area() - mesh.total_area()).abs() < 1e-15);
        // connectivity also round-trips
        let c0 = build_connectivity(&mesh).unwrap();
        let c1 = build_connectivity(&reloaded).unwrap();
        assert_eq!(c0.internal.len(), c1.internal.len());
    }

    #[test]
    fn incidence_identity_from_msh_fixture() {
        let mesh = parse_msh(TWO_TRIANGLE_SQUARE).unwrap();
        let conn = build_connectivity(&mesh).unwrap();
        assert_eq!(3 * mesh.n_triangles(), 2 * conn.internal.len() + conn.boundary.len());
    }
}
