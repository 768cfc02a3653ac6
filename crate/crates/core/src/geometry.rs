//! Distance, centroid, and potential primitives.
//!
//! Everything here is squared Euclidean: the potential of a point set `A`
//! against centers `C` is `sum over a in A of min over c in C of ||a - c||^2`,
//! and all other modules build on these kernels. Ties between equally near
//! centers break toward the lowest center index so runs are reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point in `R^d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    /// Builds a point, rejecting empty coordinate lists and non-finite values.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidPoint("zero-dimensional point".into()));
        }
        if let Some(bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint(format!("non-finite coordinate {bad}")));
        }
        Ok(Self { coords })
    }

    /// Used where coordinates are produced by arithmetic on already-validated
    /// points (means of finite values).
    pub(crate) fn from_coords(coords: Vec<f64>) -> Self {
        debug_assert!(coords.iter().all(|c| c.is_finite()));
        Self { coords }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

/// An ordered collection of `n >= 1` points sharing one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    points: Vec<Point>,
    dim: usize,
}

impl Dataset {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyDataset)?.dim();
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
        }
        Ok(Self { points, dim })
    }

    /// Convenience constructor from raw coordinate rows.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let points = rows.into_iter().map(Point::new).collect::<Result<_>>()?;
        Self::new(points)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

/// How a center entered the center set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    /// Centroid of the supervised points carrying this label.
    SupervisedCentroid { label: usize },
    /// Drawn with probability proportional to squared distance mass.
    D2Sampled,
    /// Drawn uniformly at random.
    UniformSampled,
    /// Centroid of the ground-truth class with this label.
    TrueCentroid { label: usize },
}

/// The current clustering: an ordered list of centers with provenance tags.
///
/// Center coordinates change under Lloyd updates but each slot keeps its tag,
/// so the label-to-slot map survives iteration.
#[derive(Debug, Clone, PartialEq)]
pub struct CenterSet {
    centers: Vec<Point>,
    provenance: Vec<Provenance>,
}

impl CenterSet {
    pub fn new(centers: Vec<Point>, provenance: Vec<Provenance>) -> Result<Self> {
        if centers.is_empty() {
            return Err(Error::EmptyCenterSet);
        }
        assert_eq!(centers.len(), provenance.len(), "one tag per center");
        let dim = centers[0].dim();
        for c in &centers {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: c.dim(),
                });
            }
        }
        Ok(Self {
            centers,
            provenance,
        })
    }

    /// Raw centers without seeding provenance; every slot is tagged as
    /// uniform-sampled.
    pub fn from_points(centers: Vec<Point>) -> Result<Self> {
        let tags = vec![Provenance::UniformSampled; centers.len()];
        Self::new(centers, tags)
    }

    pub(crate) fn push(&mut self, center: Point, tag: Provenance) -> Result<()> {
        if center.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: center.dim(),
            });
        }
        self.centers.push(center);
        self.provenance.push(tag);
        Ok(())
    }

    pub(crate) fn replace_center(&mut self, slot: usize, center: Point) {
        debug_assert_eq!(center.dim(), self.dim());
        self.centers[slot] = center;
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.centers[0].dim()
    }

    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn center(&self, i: usize) -> &Point {
        &self.centers[i]
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    /// The slot holding the centroid for `label`, whether it came from
    /// supervision or from ground truth. Pinned assignment resolves labels
    /// through this map.
    pub fn slot_for_label(&self, label: usize) -> Option<usize> {
        self.provenance.iter().position(|p| {
            matches!(p,
                Provenance::SupervisedCentroid { label: l }
                | Provenance::TrueCentroid { label: l } if *l == label)
        })
    }
}

/// `||a - b||^2`. Errors on dimension mismatch.
pub fn squared_distance(a: &Point, b: &Point) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    Ok(a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| (x - y) * (x - y))
        .sum())
}

/// Coordinate-wise mean of a nonempty point set.
pub fn centroid(points: &[Point]) -> Result<Point> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    let dim = first.dim();
    let mut sum = vec![0.0; dim];
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
        for (s, c) in sum.iter_mut().zip(p.coords()) {
            *s += c;
        }
    }
    let n = points.len() as f64;
    for s in &mut sum {
        *s /= n;
    }
    Ok(Point::from_coords(sum))
}

/// Centroid of the points selected by `indices`.
pub(crate) fn centroid_indexed(data: &Dataset, indices: &[usize]) -> Result<Point> {
    if indices.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut sum = vec![0.0; data.dim()];
    for &i in indices {
        for (s, c) in sum.iter_mut().zip(data.point(i).coords()) {
            *s += c;
        }
    }
    let n = indices.len() as f64;
    for s in &mut sum {
        *s /= n;
    }
    Ok(Point::from_coords(sum))
}

/// `D^2(x)`: squared distance from `x` to its nearest center.
pub fn d_squared(x: &Point, centers: &CenterSet) -> Result<f64> {
    if centers.is_empty() {
        return Err(Error::EmptyCenterSet);
    }
    let mut best = f64::INFINITY;
    for c in centers.centers() {
        let d = squared_distance(x, c)?;
        if d < best {
            best = d;
        }
    }
    Ok(best)
}

/// Index of the nearest center, lowest index winning ties.
pub fn nearest_center(x: &Point, centers: &CenterSet) -> Result<usize> {
    if centers.is_empty() {
        return Err(Error::EmptyCenterSet);
    }
    let mut best = f64::INFINITY;
    let mut best_idx = 0;
    for (i, c) in centers.centers().iter().enumerate() {
        let d = squared_distance(x, c)?;
        if d < best {
            best = d;
            best_idx = i;
        }
    }
    Ok(best_idx)
}

/// The potential `phi(A; C)`: sum of `D^2` over the points of `A`, accumulated
/// in point order. Additive over disjoint subsets.
pub fn potential(points: &[Point], centers: &CenterSet) -> Result<f64> {
    let mut total = 0.0;
    for p in points {
        total += d_squared(p, centers)?;
    }
    Ok(total)
}

/// Nearest-center partition of the dataset indices into `|C|` groups; groups
/// may be empty.
pub fn optimal_cluster_partition(data: &Dataset, centers: &CenterSet) -> Result<Vec<Vec<usize>>> {
    let mut groups = vec![Vec::new(); centers.len()];
    for (i, p) in data.points().iter().enumerate() {
        groups[nearest_center(p, centers)?].push(i);
    }
    Ok(groups)
}
