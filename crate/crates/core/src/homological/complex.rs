//! Simplicial complexes and their reduced homology.

use std::collections::{HashMap, HashSet};

use super::rank::rank_sparse;
use super::FieldChar;
use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::support::Support;

/// Faces grouped by dimension: `faces[d + 1]` holds the `d`-faces, so
/// `faces[0]` is `[∅]` for a nonvoid complex.
pub type FacesByDim = Vec<Vec<Support>>;

/// The Stanley–Reisner complex of a squarefree ideal: a support is a face
/// iff its monomial is not in the ideal.
#[derive(Clone, Debug)]
pub struct SimplicialComplexView<'a> {
    ideal: &'a SquarefreeIdeal,
}

impl<'a> SimplicialComplexView<'a> {
    pub fn new(ideal: &'a SquarefreeIdeal) -> Self {
        SimplicialComplexView { ideal }
    }

    pub fn vertex_set(&self) -> Support {
        Support::full(self.ideal.ambient())
    }

    pub fn is_face(&self, f: Support) -> bool {
        !self.ideal.contains(f)
    }

    /// Faces of the induced subcomplex on `sigma`, grouped by dimension.
    pub fn faces_within(&self, sigma: Support) -> FacesByDim {
        let vertices = sigma.to_vec();
        // For each vertex, the generators inside sigma that contain it, with
        // that vertex removed. Adding `v` to a face `f` of smaller vertices
        // keeps it a face iff none of these is a subset of `f`.
        let blockers: Vec<Vec<Support>> = vertices
            .iter()
            .map(|&v| {
                self.ideal
                    .gens()
                    .iter()
                    .filter(|g| g.contains(v) && g.is_subset(sigma))
                    .map(|g| g.without(v))
                    .collect()
            })
            .collect();
        let mut faces: FacesByDim = vec![vec![Support::EMPTY]];
        let mut stack: Vec<(Support, usize)> = vec![(Support::EMPTY, 0)];
        while let Some((face, start)) = stack.pop() {
            for t in start..vertices.len() {
                if blockers[t].iter().any(|b| b.is_subset(face)) {
                    continue;
                }
                let next = face.with(vertices[t]);
                let dim = next.len();
                if faces.len() <= dim {
                    faces.push(Vec::new());
                }
                faces[dim].push(next);
                stack.push((next, t + 1));
            }
        }
        faces
    }
}

/// Reduced homology ranks of a complex given by its faces.
///
/// Entry `t` of the result is `dim H̃_{t-1}`, so entry 0 is the degree −1
/// group (rank 1 exactly for the irrelevant complex `{∅}`). The void complex
/// (no faces) yields an empty vector.
pub fn reduced_homology_dims(faces: &[Support], field: FieldChar) -> Result<Vec<usize>> {
    if faces.is_empty() {
        return Ok(Vec::new());
    }
    let set: HashSet<Support> = faces.iter().copied().collect();
    for &f in &set {
        if f.iter().any(|v| !set.contains(&f.without(v))) || !set.contains(&Support::EMPTY) {
            return Err(Error::NotDownClosed);
        }
    }
    let top = set.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut by_dim: FacesByDim = vec![Vec::new(); top + 1];
    for &f in &set {
        by_dim[f.len()].push(f);
    }
    for layer in by_dim.iter_mut() {
        layer.sort();
    }
    Ok(homology_of_layers(&by_dim, field))
}

/// Reduced homology from faces already grouped by size (`layers[s]` holds the
/// faces with `s` vertices, and `layers[0] == [∅]`).
pub(crate) fn homology_of_layers(layers: &FacesByDim, field: FieldChar) -> Vec<usize> {
    // boundary_rank[s] = rank of the map from size-s faces to size-(s-1) faces
    let mut boundary_rank = vec![0usize; layers.len() + 1];
    for s in 1..layers.len() {
        let index: HashMap<Support, usize> = layers[s - 1]
            .iter()
            .enumerate()
            .map(|(k, &f)| (f, k))
            .collect();
        let rows: Vec<Vec<(usize, i64)>> = layers[s]
            .iter()
            .map(|f| {
                f.iter()
                    .enumerate()
                    .map(|(t, v)| {
                        let sign = if t % 2 == 0 { 1 } else { -1 };
                        (index[&f.without(v)], sign)
                    })
                    .collect()
            })
            .collect();
        boundary_rank[s] = rank_sparse(&rows, layers[s - 1].len(), field);
    }
    (0..layers.len())
        .map(|s| layers[s].len() - boundary_rank[s] - boundary_rank[s + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(ix: &[usize]) -> Support {
        Support::from_indices(ix.iter().copied())
    }

    fn gf2() -> FieldChar {
        FieldChar::default()
    }

    #[test]
    fn two_points_disconnected() {
        let faces = [s(&[]), s(&[0]), s(&[1])];
        assert_eq!(reduced_homology_dims(&faces, gf2()).unwrap(), vec![0, 1]);
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let faces = [
            s(&[]),
            s(&[0]),
            s(&[1]),
            s(&[2]),
            s(&[0, 1]),
            s(&[0, 2]),
            s(&[1, 2]),
        ];
        assert_eq!(reduced_homology_dims(&faces, gf2()).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn void_and_irrelevant_complexes() {
        assert!(reduced_homology_dims(&[], gf2()).unwrap().is_empty());
        assert_eq!(reduced_homology_dims(&[s(&[])], gf2()).unwrap(), vec![1]);
    }

    #[test]
    fn rejects_non_down_closed() {
        assert!(matches!(
            reduced_homology_dims(&[s(&[]), s(&[0, 1])], gf2()),
            Err(Error::NotDownClosed)
        ));
        assert!(reduced_homology_dims(&[s(&[0])], gf2()).is_err());
    }

    #[test]
    fn independence_complex_of_an_edge() {
        let i = SquarefreeIdeal::from_index_lists(2, &[&[0, 1]]).unwrap();
        let view = SimplicialComplexView::new(&i);
        let faces = view.faces_within(s(&[0, 1]));
        assert_eq!(faces, vec![vec![s(&[])], vec![s(&[0]), s(&[1])]]);
        assert!(view.is_face(s(&[0])));
        assert!(!view.is_face(s(&[0, 1])));
    }
}
