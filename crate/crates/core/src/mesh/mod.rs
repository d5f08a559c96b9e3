//! Triangulations: storage, invariant checks, structured generation, and a
//! Gmsh MSH 2.2 reader/writer. Counterclockwise orientation is enforced on
//! construction; edge connectivity lives in [`connectivity`].

mod connectivity;
mod msh;

pub use connectivity::{affine_map, build_connectivity, AffineMap, BoundaryEdge, EdgeConnectivity, InternalEdge};
pub use msh::{load_gmsh, write_gmsh};

use crate::error::{Error, Result};

/// A boundary segment of the input mesh: two vertex indices plus the
/// physical tag that selects its boundary condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TaggedEdge {
    pub vertices: [usize; 2],
    pub tag: i32,
}

/// Conforming triangulation. Triangles are stored counterclockwise; every
/// topological boundary edge must appear in `boundary_edges` with a tag.
#[derive(Debug, Clone)]
pub struct Mesh {
    /// Vertex coordinates in meters.
    pub vertices: Vec<[f64; 2]>,
    /// Vertex indices of each triangle, counterclockwise.
    pub triangles: Vec<[usize; 3]>,
    /// Tagged boundary segments.
    pub boundary_edges: Vec<TaggedEdge>,
    /// Physical region tag per triangle (0 when the source had none).
    pub region_tags: Vec<i32>,
}

impl Mesh {
    /// Build a mesh, fixing clockwise triangles and validating indices.
    pub fn new(
        vertices: Vec<[f64; 2]>,
        mut triangles: Vec<[usize; 3]>,
        boundary_edges: Vec<TaggedEdge>,
        region_tags: Vec<i32>,
    ) -> Result<Self> {
        let nv = vertices.len();
        for (k, tri) in triangles.iter_mut().enumerate() {
            if tri.iter().any(|&v| v >= nv) {
                return Err(Error::Mesh(format!("triangle {k} references a missing vertex")));
            }
            let area = signed_area(&vertices, *tri);
            if area == 0.0 {
                return Err(Error::Mesh(format!("triangle {k} is degenerate (zero area)")));
            }
            if area < 0.0 {
                tri.swap(1, 2);
            }
        }
        for (e, edge) in boundary_edges.iter().enumerate() {
            if edge.vertices.iter().any(|&v| v >= nv) {
                return Err(Error::Mesh(format!("boundary edge {e} references a missing vertex")));
            }
        }
        let region_tags = if region_tags.is_empty() {
            vec![0; triangles.len()]
        } else if region_tags.len() == triangles.len() {
            region_tags
        } else {
            return Err(Error::Mesh("region tag list does not match triangle count".into()));
        };
        Ok(Self { vertices, triangles, boundary_edges, region_tags })
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangle_area(&self, k: usize) -> f64 {
        signed_area(&self.vertices, self.triangles[k])
    }

    pub fn total_area(&self) -> f64 {
        (0..self.n_triangles()).map(|k| self.triangle_area(k)).sum()
    }

    /// Circumdiameter of one element: product of side lengths over twice the
    /// area (for a right triangle this is the hypotenuse).
    pub fn circumdiameter(&self, k: usize) -> f64 {
        let [a, b, c] = self.triangles[k];
        let la = dist(self.vertices[b], self.vertices[c]);
        let lb = dist(self.vertices[c], self.vertices[a]);
        let lc = dist(self.vertices[a], self.vertices[b]);
        la * lb * lc / (2.0 * self.triangle_area(k))
    }

    /// Grid size h: the maximum element circumdiameter.
    pub fn grid_size(&self) -> f64 {
        (0..self.n_triangles())
            .map(|k| self.circumdiameter(k))
            .fold(0.0, f64::max)
    }

    /// Locate the element containing a point; ties on shared edges resolve
    /// to the lowest element index. Barycentric tolerance 1e-12 relative.
    pub fn locate(&self, x: f64, y: f64) -> Option<usize> {
        for k in 0..self.n_triangles() {
            let map = affine_map(self, k);
            let [xi, eta] = map.pull_back([x, y]);
            let tol = 1e-12;
            if xi >= -tol && eta >= -tol && xi + eta <= 1.0 + tol {
                return Some(k);
            }
        }
        None
    }
}

pub(crate) fn signed_area(vertices: &[[f64; 2]], tri: [usize; 3]) -> f64 {
    let [a, b, c] = tri;
    let (ax, ay) = (vertices[a][0], vertices[a][1]);
    let (bx, by) = (vertices[b][0], vertices[b][1]);
    let (cx, cy) = (vertices[c][0], vertices[c][1]);
    0.5 * ((bx - ax) * (cy - ay) - (cx - ax) * (by - ay))
}

fn dist(a: [f64; 2], b: [f64; 2]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

/// Sides of a rectangle, used to tag structured-mesh boundaries.
/// Default tags: left = 1, right = 2, bottom = 3, top = 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Bottom,
    Top,
}

impl Side {
    pub fn default_tag(self) -> i32 {
        match self {
            Side::Left => 1,
            Side::Right => 2,
            Side::Bottom => 3,
            Side::Top => 4,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "bottom" => Ok(Side::Bottom),
            "top" => Ok(Side::Top),
            other => Err(Error::Config(format!("unknown side '{other}'"))),
        }
    }
}

/// Re-tags the boundary edges of one side whose midpoints fall in
/// `[from, to]` (coordinate along the side: y on left/right, x on bottom/top).
#[derive(Debug, Clone, Copy)]
pub struct SegmentTag {
    pub side: Side,
    pub from: f64,
    pub to: f64,
    pub tag: i32,
}

/// Structured triangulation of a rectangle: nx-by-ny cells, each split along
/// the main diagonal.
#[derive(Debug, Clone)]
pub struct StructuredSpec {
    pub nx: usize,
    pub ny: usize,
    pub lx: f64,
    pub ly: f64,
    pub origin: [f64; 2],
    pub segments: Vec<SegmentTag>,
}

impl StructuredSpec {
    pub fn new(nx: usize, ny: usize, lx: f64, ly: f64) -> Self {
        Self { nx, ny, lx, ly, origin: [0.0, 0.0], segments: Vec::new() }
    }
}

pub fn structured_rectangle(spec: &StructuredSpec) -> Result<Mesh> {
    let &StructuredSpec { nx, ny, lx, ly, origin, ref segments } = spec;
    if nx == 0 || ny == 0 || lx <= 0.0 || ly <= 0.0 {
        return Err(Error::Config("structured mesh needs nx, ny >= 1 and positive extents".into()));
    }
    let dx = lx / nx as f64;
    let dy = ly / ny as f64;
    let vid = |i: usize, j: usize| j * (nx + 1) + i;
    let mut vertices = Vec::with_capacity((nx + 1) * (ny + 1));
    for j in 0..=ny {
        for i in 0..=nx {
            vertices.push([origin[0] + i as f64 * dx, origin[1] + j as f64 * dy]);
        }
    }
    let mut triangles = Vec::with_capacity(2 * nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            triangles.push([vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)]);
            triangles.push([vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)]);
        }
    }
    let tag_for = |side: Side, mid: f64| -> i32 {
        segments
            .iter()
            .find(|s| s.side == side && mid >= s.from && mid <= s.to)
            .map(|s| s.tag)
            .unwrap_or_else(|| side.default_tag())
    };
    let mut boundary_edges = Vec::with_capacity(2 * (nx + ny));
    for j in 0..ny {
        let mid = origin[1] + (j as f64 + 0.5) * dy;
        boundary_edges.push(TaggedEdge {
            vertices: [vid(0, j + 1), vid(0, j)],
            tag: tag_for(Side::Left, mid),
        });
        boundary_edges.push(TaggedEdge {
            vertices: [vid(nx, j), vid(nx, j + 1)],
            tag: tag_for(Side::Right, mid),
        });
    }
    for i in 0..nx {
        let mid = origin[0] + (i as f64 + 0.5) * dx;
        boundary_edges.push(TaggedEdge {
            vertices: [vid(i, 0), vid(i + 1, 0)],
            tag: tag_for(Side::Bottom, mid),
        });
        boundary_edges.push(TaggedEdge {
            vertices: [vid(i + 1, ny), vid(i, ny)],
            tag: tag_for(Side::Top, mid),
        });
    }
    Mesh::new(vertices, triangles, boundary_edges, Vec::new())
}

/// Structured mesh whose circumdiameter (cell diagonal) does not exceed the
/// requested grid size; cells are kept square.
pub fn structured_for_grid_size(lx: f64, ly: f64, h: f64) -> Result<Mesh> {
    let cell = h / 2f64.sqrt();
    let nx = (lx / cell).ceil() as usize;
    let ny = (ly / cell).ceil() as usize;
    structured_rectangle(&StructuredSpec::new(nx.max(1), ny.max(1), lx, ly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn unit_square_two_triangles_exact_area() {
        let mesh = structured_rectangle(&StructuredSpec::new(1, 1, 1.0, 1.0)).unwrap();
        assert_eq!(mesh.n_triangles(), 2);
        assert_eq!(mesh.boundary_edges.len(), 4);
        assert_eq!(mesh.total_area(), 1.0);
    }

    #[test]
    fn clockwise_triangle_reoriented() {
        let vertices = vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        let mesh = Mesh::new(
            vertices,
            vec![[0, 2, 1]], // clockwise on purpose
            vec![
                TaggedEdge { vertices: [0, 1], tag: 1 },
                TaggedEdge { vertices: [1, 2], tag: 1 },
                TaggedEdge { vertices: [2, 0], tag: 1 },
            ],
            Vec::new(),
        )
        .unwrap();
        assert!(mesh.triangle_area(0) > 0.0);
        assert_abs_diff_eq!(mesh.triangle_area(0), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn structured_counts_follow_incidence_identity() {
        // 3 * #triangles = 2 * #internal + #boundary for the N = 2 square
        let mesh = structured_rectangle(&StructuredSpec::new(2, 2, 1.0, 1.0)).unwrap();
        assert_eq!(mesh.n_triangles(), 8);
        let conn = build_connectivity(&mesh).unwrap();
        assert_eq!(conn.boundary.len(), 8);
        assert_eq!(conn.internal.len(), 8);
        assert_eq!(3 * mesh.n_triangles(), 2 * conn.internal.len() + conn.boundary.len());
    }

    #[test]
    fn area_sums_to_domain_area() {
        let mesh = structured_rectangle(&StructuredSpec::new(7, 4, 0.02, 0.04)).unwrap();
        assert_abs_diff_eq!(mesh.total_area(), 0.02 * 0.04, epsilon = 1e-12);
    }

    #[test]
    fn grid_size_is_cell_diagonal() {
        let mesh = structured_rectangle(&StructuredSpec::new(10, 10, 1.0, 1.0)).unwrap();
        assert_abs_diff_eq!(mesh.grid_size(), 2f64.sqrt() / 10.0, epsilon = 1e-12);
    }

    #[test]
    fn segment_tags_override_side_defaults() {
        let mut spec = StructuredSpec::new(4, 4, 1.0, 1.0);
        spec.segments.push(SegmentTag { side: Side::Left, from: 0.4, to: 0.6, tag: 10 });
        let mesh = structured_rectangle(&spec).unwrap();
        let left: Vec<i32> = mesh
            .boundary_edges
            .iter()
            .filter(|e| mesh.vertices[e.vertices[0]][0] == 0.0 && mesh.vertices[e.vertices[1]][0] == 0.0)
            .map(|e| e.tag)
            .collect();
        assert_eq!(left.iter().filter(|&&t| t == 10).count(), 1);
        assert_eq!(left.iter().filter(|&&t| t == 1).count(), 3);
    }

    #[test]
    fn locate_resolves_edge_ties_to_lowest_index() {
        let mesh = structured_rectangle(&StructuredSpec::new(1, 1, 1.0, 1.0)).unwrap();
        // point on the shared diagonal belongs to both triangles
        assert_eq!(mesh.locate(0.5, 0.5), Some(0));
        assert_eq!(mesh.locate(0.9, 0.05), Some(0));
        assert_eq!(mesh.locate(0.05, 0.9), Some(1));
        assert_eq!(mesh.locate(1.5, 0.5), None);
    }
}
