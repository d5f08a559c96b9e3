//! Oriented edge connectivity and affine reference maps.
//!
//! Internal edge orientation: the edge is identified by its lexicographically
//! ordered vertex pair (a < b); the unit normal is the -90 degree rotation of
//! the a->b tangent, and the element the normal points into is K+ (the other
//! is K-). This is deterministic and independent of element iteration order.

use std::collections::BTreeMap;

use super::Mesh;
use crate::error::{Error, Result};

/// Internal edge shared by two elements.
#[derive(Debug, Clone, Copy)]
pub struct InternalEdge {
    /// Lexicographically ordered vertex pair.
    pub vertices: [usize; 2],
    /// Element the normal points into, with its local edge index.
    pub plus: (usize, usize),
    /// Element the normal points out of, with its local edge index.
    pub minus: (usize, usize),
    /// Unit normal from K- into K+.
    pub normal: [f64; 2],
    pub length: f64,
}

/// Boundary edge with its owner element and outward normal.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryEdge {
    /// Vertices in the owner's counterclockwise traversal order.
    pub vertices: [usize; 2],
    pub owner: (usize, usize),
    /// Outward unit normal.
    pub normal: [f64; 2],
    pub length: f64,
    pub tag: i32,
}

#[derive(Debug, Clone, Default)]
pub struct EdgeConnectivity {
    pub internal: Vec<InternalEdge>,
    pub boundary: Vec<BoundaryEdge>,
}

/// Affine map from the reference triangle (0,0)-(1,0)-(0,1) onto an element.
#[derive(Debug, Clone, Copy)]
pub struct AffineMap {
    /// Row-major Jacobian; columns are v1 - v0 and v2 - v0.
    pub jac: [[f64; 2]; 2],
    pub shift: [f64; 2],
    pub det: f64,
    /// Inverse transpose, for pushing reference gradients to physical space.
    pub inv_t: [[f64; 2]; 2],
}

impl AffineMap {
    pub fn apply(&self, r: [f64; 2]) -> [f64; 2] {
        [
            self.shift[0] + self.jac[0][0] * r[0] + self.jac[0][1] * r[1],
            self.shift[1] + self.jac[1][0] * r[0] + self.jac[1][1] * r[1],
        ]
    }

    pub fn pull_back(&self, p: [f64; 2]) -> [f64; 2] {
        let dx = p[0] - self.shift[0];
        let dy = p[1] - self.shift[1];
        [
            (self.jac[1][1] * dx - self.jac[0][1] * dy) / self.det,
            (-self.jac[1][0] * dx + self.jac[0][0] * dy) / self.det,
        ]
    }

    /// Physical gradient from a reference gradient.
    pub fn push_gradient(&self, g: [f64; 2]) -> [f64; 2] {
        [
            self.inv_t[0][0] * g[0] + self.inv_t[0][1] * g[1],
            self.inv_t[1][0] * g[0] + self.inv_t[1][1] * g[1],
        ]
    }
}

/// Map of element `k`; determinant equals twice the (positive) element area.
pub fn affine_map(mesh: &Mesh, k: usize) -> AffineMap {
    let [a, b, c] = mesh.triangles[k];
    let v0 = mesh.vertices[a];
    let v1 = mesh.vertices[b];
    let v2 = mesh.vertices[c];
    let jac = [[v1[0] - v0[0], v2[0] - v0[0]], [v1[1] - v0[1], v2[1] - v0[1]]];
    let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    let inv_t = [
        [jac[1][1] / det, -jac[1][0] / det],
        [-jac[0][1] / det, jac[0][0] / det],
    ];
    AffineMap { jac, shift: v0, det, inv_t }
}

/// Local edge `e` of a triangle runs from vertex `e` to vertex `(e+1) % 3`.
pub(crate) fn local_edge_vertices(tri: [usize; 3], local: usize) -> [usize; 2] {
    [tri[local], tri[(local + 1) % 3]]
}

fn unit(v: [f64; 2]) -> ([f64; 2], f64) {
    let len = (v[0] * v[0] + v[1] * v[1]).sqrt();
    ([v[0] / len, v[1] / len], len)
}

/// Build oriented internal/boundary connectivity and check the boundary tag
/// partition.
pub fn build_connectivity(mesh: &Mesh) -> Result<EdgeConnectivity> {
    // sorted vertex pair -> incident (element, local edge) list
    let mut incidence: BTreeMap<[usize; 2], Vec<(usize, usize)>> = BTreeMap::new();
    for (k, tri) in mesh.triangles.iter().enumerate() {
        for local in 0..3 {
            let [a, b] = local_edge_vertices(*tri, local);
            let key = [a.min(b), a.max(b)];
            incidence.entry(key).or_default().push((k, local));
        }
    }

    let mut tags: BTreeMap<[usize; 2], i32> = BTreeMap::new();
    for edge in &mesh.boundary_edges {
        let [a, b] = edge.vertices;
        let key = [a.min(b), a.max(b)];
        if !incidence.contains_key(&key) {
            return Err(Error::Mesh(format!(
                "tagged boundary edge ({a}, {b}) does not match any triangle edge"
            )));
        }
        tags.insert(key, edge.tag);
    }

    let mut conn = EdgeConnectivity::default();
    for (key, incident) in &incidence {
        match incident.as_slice() {
            [(k, local)] => {
                let tag = *tags.get(key).ok_or_else(|| {
                    Error::Mesh(format!(
                        "untagged boundary edge ({}, {}): physical tags must partition the boundary",
                        key[0], key[1]
                    ))
                })?;
                let verts = local_edge_vertices(mesh.triangles[*k], *local);
                let d = [
                    mesh.vertices[verts[1]][0] - mesh.vertices[verts[0]][0],
                    mesh.vertices[verts[1]][1] - mesh.vertices[verts[0]][1],
                ];
                // CCW traversal keeps the interior on the left, so the
                // outward normal is the -90 degree rotation of the tangent
                let (t, length) = unit(d);
                conn.boundary.push(BoundaryEdge {
                    vertices: verts,
                    owner: (*k, *local),
                    normal: [t[1], -t[0]],
                    length,
                    tag,
                });
            }
            [(k1, l1), (k2, l2)] => {
                if tags.contains_key(key) {
                    return Err(Error::Mesh(format!(
                        "edge ({}, {}) carries a boundary tag but is shared by two triangles",
                        key[0], key[1]
                    )));
                }
                let va = mesh.vertices[key[0]];
                let vb = mesh.vertices[key[1]];
                let (t, length) = unit([vb[0] - va[0], vb[1] - va[1]]);
                let normal = [t[1], -t[0]];
                // K+ is the element the normal points into
                let mid = [0.5 * (va[0] + vb[0]), 0.5 * (va[1] + vb[1])];
                let centroid = |k: usize| -> [f64; 2] {
                    let [a, b, c] = mesh.triangles[k];
                    [
                        (mesh.vertices[a][0] + mesh.vertices[b][0] + mesh.vertices[c][0]) / 3.0,
                        (mesh.vertices[a][1] + mesh.vertices[b][1] + mesh.vertices[c][1]) / 3.0,
                    ]
                };
                let side = |k: usize| -> f64 {
                    let c = centroid(k);
                    (c[0] - mid[0]) * normal[0] + (c[1] - mid[1]) * normal[1]
                };
                let (plus, minus) = if side(*k1) > 0.0 {
                    ((*k1, *l1), (*k2, *l2))
                } else {
                    ((*k2, *l2), (*k1, *l1))
                };
                conn.internal.push(InternalEdge {
                    vertices: *key,
                    plus,
                    minus,
                    normal,
                    length,
                });
            }
            more => {
                return Err(Error::Mesh(format!(
                    "edge ({}, {}) is shared by {} triangles (non-manifold mesh)",
                    key[0],
                    key[1],
                    more.len()
                )));
            }
        }
    }
    Ok(conn)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::{structured_rectangle, StructuredSpec, TaggedEdge};
    use approx::assert_abs_diff_eq;

    fn anti_diagonal_square() -> Mesh {
        // unit square split along (1,0)-(0,1)
        Mesh::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]],
            vec![[0, 1, 2], [1, 3, 2]],
            vec![
                TaggedEdge { vertices: [0, 1], tag: 3 },
                TaggedEdge { vertices: [1, 3], tag: 2 },
                TaggedEdge { vertices: [3, 2], tag: 4 },
                TaggedEdge { vertices: [2, 0], tag: 1 },
            ],
            Vec::new(),
        )
        .unwrap()
    }

    #[test]
    fn two_triangle_square_has_one_diagonal_edge() {
        let mesh = anti_diagonal_square();
        let conn = build_connectivity(&mesh).unwrap();
        assert_eq!(conn.internal.len(), 1);
        assert_eq!(conn.boundary.len(), 4);
        let e = &conn.internal[0];
        let s = 0.5f64.sqrt();
        assert_abs_diff_eq!(e.normal[0].abs(), s, epsilon = 1e-14);
        assert_abs_diff_eq!(e.normal[1].abs(), s, epsilon = 1e-14);
        // unit length within 1e-14
        let n2 = e.normal[0].powi(2) + e.normal[1].powi(2);
        assert_abs_diff_eq!(n2, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.length, 2f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn bottom_edge_outward_normal_points_down() {
        let mesh = anti_diagonal_square();
        let conn = build_connectivity(&mesh).unwrap();
        let bottom = conn.boundary.iter().find(|e| e.tag == 3).unwrap();
        assert_abs_diff_eq!(bottom.normal[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(bottom.normal[1], -1.0, epsilon = 1e-15);
    }

    #[test]
    fn plus_side_lies_along_the_normal() {
        let mesh = structured_rectangle(&StructuredSpec::new(4, 4, 1.0, 1.0)).unwrap();
        let conn = build_connectivity(&mesh).unwrap();
        for e in &conn.internal {
            let centroid = |k: usize| {
                let [a, b, c] = mesh.triangles[k];
                [
                    (mesh.vertices[a][0] + mesh.vertices[b][0] + mesh.vertices[c][0]) / 3.0,
                    (mesh.vertices[a][1] + mesh.vertices[b][1] + mesh.vertices[c][1]) / 3.0,
                ]
            };
            let cp = centroid(e.plus.0);
            let cm = centroid(e.minus.0);
            let d = (cp[0] - cm[0]) * e.normal[0] + (cp[1] - cm[1]) * e.normal[1];
            assert!(d > 0.0, "normal must point from K- into K+");
        }
    }

    #[test]
    fn incidence_identity_on_structured_meshes() {
        for n in [1usize, 2, 4] {
            let mesh = structured_rectangle(&StructuredSpec::new(n, n, 1.0, 1.0)).unwrap();
            let conn = build_connectivity(&mesh).unwrap();
            assert_eq!(
                3 * mesh.n_triangles(),
                2 * conn.internal.len() + conn.boundary.len()
            );
        }
        // N = 4: (3 * 32 - 16) / 2 = 40 internal edges
        let mesh = structured_rectangle(&StructuredSpec::new(4, 4, 1.0, 1.0)).unwrap();
        let conn = build_connectivity(&mesh).unwrap();
        assert_eq!(conn.internal.len(), 40);
    }

    #[test]
    fn untagged_boundary_edge_rejected() {
        let mesh = Mesh::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            vec![[0, 1, 2]],
            vec![
                TaggedEdge { vertices: [0, 1], tag: 1 },
                TaggedEdge { vertices: [1, 2], tag: 1 },
            ],
            Vec::new(),
        )
        .unwrap();
        assert!(build_connectivity(&mesh).is_err());
    }

    #[test]
    fn affine_map_identity_and_scaling() {
        let reference = Mesh::new(
            vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
            vec![[0, 1, 2]],
            vec![
                TaggedEdge { vertices: [0, 1], tag: 1 },
                TaggedEdge { vertices: [1, 2], tag: 1 },
                TaggedEdge { vertices: [2, 0], tag: 1 },
            ],
            Vec::new(),
        )
        .unwrap();
        let map = affine_map(&reference, 0);
        assert_eq!(map.jac, [[1.0, 0.0], [0.0, 1.0]]);
        assert_eq!(map.det, 1.0);

        let scaled = Mesh::new(
            vec![[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]],
            vec![[0, 1, 2]],
            vec![
                TaggedEdge { vertices: [0, 1], tag: 1 },
                TaggedEdge { vertices: [1, 2], tag: 1 },
                TaggedEdge { vertices: [2, 0], tag: 1 },
            ],
            Vec::new(),
        )
        .unwrap();
        assert_abs_diff_eq!(affine_map(&scaled, 0).det, 4.0, epsilon = 1e-15);
    }

    #[test]
    fn map_round_trip_and_centroid() {
        let mesh = Mesh::new(
            vec![[0.31, -0.2], [1.7, 0.44], [0.6, 1.9]],
            vec![[0, 1, 2]],
            vec![
                TaggedEdge { vertices: [0, 1], tag: 1 },
                TaggedEdge { vertices: [1, 2], tag: 1 },
                TaggedEdge { vertices: [2, 0], tag: 1 },
            ],
            Vec::new(),
        )
        .unwrap();
        let map = affine_map(&mesh, 0);
        // mapped reference barycenter equals the vertex average
        let c = map.apply([1.0 / 3.0, 1.0 / 3.0]);
        let expect = [
            (0.31 + 1.7 + 0.6) / 3.0,
            (-0.2 + 0.44 + 1.9) / 3.0,
        ];
        assert_abs_diff_eq!(c[0], expect[0], epsilon = 1e-14);
        assert_abs_diff_eq!(c[1], expect[1], epsilon = 1e-14);
        // compose map and inverse
        for r in [[0.2, 0.3], [0.0, 0.0], [0.5, 0.5]] {
            let back = map.pull_back(map.apply(r));
            assert_abs_diff_eq!(back[0], r[0], epsilon = 1e-13);
            assert_abs_diff_eq!(back[1], r[1], epsilon = 1e-13);
        }
        assert_abs_diff_eq!(map.det, 2.0 * mesh.triangle_area(0), epsilon = 1e-14);
    }
}
