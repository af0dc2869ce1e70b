//! Moore-neighbor boundary tracing.

use std::collections::HashMap;

use super::region::BinaryRegion;

/// Neighbor ring in clockwise screen order (x right, y down), which walks
/// the outer boundary with positive shoelace orientation.
const RING: [(i64, i64); 8] = [
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
];

/// A closed boundary loop. The first point is logically repeated after the
/// last one but not stored twice. Consecutive points are 8-adjacent; pixels
/// of one-pixel-wide parts may legitimately appear more than once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contour {
    points: Vec<(i64, i64)>,
}

impl Contour {
    pub fn new(points: Vec<(i64, i64)>) -> Self {
        assert!(!points.is_empty(), "contour must have at least one point");
        Contour { points }
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Traces the outer boundary of `region` with Moore-neighbor following,
/// starting at the topmost-leftmost boundary pixel. The walk scans
/// neighbors clockwise on screen, which yields the loop in counter-clockwise
/// (positive shoelace) order in ordinary x/y coordinates.
///
/// Termination generalizes Jacob's criterion: the walk stops as soon as a
/// (pixel, backtrack) state repeats, and the emitted loop is exactly the
/// resulting cycle, rotated to start at its topmost-leftmost point.
pub fn trace_boundary(region: &BinaryRegion) -> Contour {
    let (local, (ox, oy)) = region.to_local_mask();
    let fg = |p: (i64, i64)| local.get_signed(p.0, p.1);

    // Topmost-leftmost foreground pixel of the local raster.
    let start = region
        .pixels()
        .iter()
        .map(|&(x, y)| (x as i64 - ox as i64, y as i64 - oy as i64))
        .min_by_key(|&(x, y)| (y, x))
        .unwrap();

    if region.area() == 1 {
        return Contour::new(vec![(start.0 + ox as i64, start.1 + oy as i64)]);
    }

    // One Moore step: scan the ring clockwise starting just after the
    // backtrack position; returns the next boundary pixel and the new
    // backtrack (the last background cell scanned).
    let step = |cur: (i64, i64), back: (i64, i64)| -> ((i64, i64), (i64, i64)) {
        let rel = (back.0 - cur.0, back.1 - cur.1);
        let bi = RING.iter().position(|&d| d == rel).expect("backtrack adjacent");
        let mut prev = back;
        for k in 1..=8 {
            let d = RING[(bi + k) % 8];
            let cand = (cur.0 + d.0, cur.1 + d.1);
            if fg(cand) {
                return (cand, prev);
            }
            prev = cand;
        }
        unreachable!("region with area > 1 always has a foreground neighbor");
    };

    // West neighbor of the topmost-leftmost pixel is guaranteed background.
    let mut cur = start;
    let mut back = (start.0 - 1, start.1);
    let mut points: Vec<(i64, i64)> = Vec::new();
    let mut seen: HashMap<((i64, i64), (i64, i64)), usize> = HashMap::new();

    let cycle_start = loop {
        if let Some(&idx) = seen.get(&(cur, back)) {
            break idx;
        }
        seen.insert((cur, back), points.len());
        points.push(cur);
        let (next, nb) = step(cur, back);
        cur = next;
        back = nb;
    };

    let mut cycle: Vec<(i64, i64)> = points[cycle_start..].to_vec();
    let top_left = (0..cycle.len())
        .min_by_key(|&i| (cycle[i].1, cycle[i].0))
        .unwrap();
    cycle.rotate_left(top_left);

    Contour::new(
        cycle
            .into_iter()
            .map(|(x, y)| (x + ox as i64, y + oy as i64))
            .collect(),
    )
}
