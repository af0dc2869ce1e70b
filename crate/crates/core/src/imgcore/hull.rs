//! Convex hulls over integer pixel coordinates and the shoelace area.

/// Cross product of (a - o) x (b - o); positive means a left (counter-clockwise) turn.
#[inline]
fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Smallest convex polygon containing all points, vertices in
/// counter-clockwise (positive shoelace) order with collinear points
/// dropped. Degenerate inputs yield fewer than 3 vertices: a single point
/// for one distinct input, the two extremes for collinear inputs.
pub fn convex_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    let n = pts.len();
    if n <= 2 {
        return pts;
    }

    // Andrew's monotone chain; strict turns so collinear points collapse.
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

/// Signed shoelace area; nonnegative for counter-clockwise input.
/// Fewer than 3 vertices yield zero.
pub fn polygon_area(polygon: &[(i64, i64)]) -> f64 {
    if polygon.len() < 3 {
        return 0.0;
    }
    let mut twice: i64 = 0;
    for i in 0..polygon.len() {
        let (x1, y1) = polygon[i];
        let (x2, y2) = polygon[(i + 1) % polygon.len()];
        twice += x1 * y2 - x2 * y1;
    }
    twice as f64 / 2.0
}

/// Number of lattice points on the closed boundary of a polygon with
/// integer vertices (sum of gcd over edges).
pub fn boundary_lattice_points(polygon: &[(i64, i64)]) -> u64 {
    if polygon.len() < 2 {
        return polygon.len() as u64;
    }
    let mut total = 0u64;
    for i in 0..polygon.len() {
        let (x1, y1) = polygon[i];
        let (x2, y2) = polygon[(i + 1) % polygon.len()];
        if (x1, y1) == (x2, y2) {
            continue;
        }
        total += gcd((x2 - x1).unsigned_abs(), (y2 - y1).unsigned_abs());
    }
    total
}

/// Pixel count of a filled convex lattice polygon: interior plus boundary
/// lattice points, via Pick's theorem (A + B/2 + 1). For degenerate hulls
/// it degrades to the lattice points on the segment or the single point.
pub fn lattice_point_count(hull: &[(i64, i64)]) -> f64 {
    match hull.len() {
        0 => 0.0,
        1 => 1.0,
        2 => {
            let (dx, dy) = (hull[1].0 - hull[0].0, hull[1].1 - hull[0].1);
            gcd(dx.unsigned_abs(), dy.unsigned_abs()) as f64 + 1.0
        }
        _ => polygon_area(hull) + boundary_lattice_points(hull) as f64 / 2.0 + 1.0,
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_plus_center_keeps_corners() {
        let pts = [(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)];
        let mut hull = convex_hull(&pts);
        assert_eq!(hull.len(), 4);
        hull.sort_unstable();
        assert_eq!(hull, vec![(0, 0), (0, 4), (4, 0), (4, 4)]);
    }

    #[test]
    fn collinear_points_give_two_extremes() {
        let hull = convex_hull(&[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(hull, vec![(0, 0), (2, 2)]);
    }

    #[test]
    fn hull_is_counter_clockwise() {
        let pts = [(0, 0), (5, 1), (6, 5), (2, 7), (-1, 3), (2, 2), (3, 4)];
        let hull = convex_hull(&pts);
        assert!(polygon_area(&hull) > 0.0);
    }

    #[test]
    fn unit_square_area() {
        assert_eq!(polygon_area(&[(0, 0), (1, 0), (1, 1), (0, 1)]), 1.0);
    }

    #[test]
    fn triangle_area() {
        assert_eq!(polygon_area(&[(0, 0), (4, 0), (0, 3)]), 6.0);
    }

    #[test]
    fn degenerate_area_is_zero() {
        assert_eq!(polygon_area(&[(0, 0), (1, 1), (2, 2)]), 0.0);
        assert_eq!(polygon_area(&[(0, 0), (1, 1)]), 0.0);
    }

    #[test]
    fn lattice_count_matches_filled_square() {
        // 10x10 pixel block: hull corners (0,0)..(9,9), 100 lattice points.
        let hull = convex_hull(&[(0, 0), (9, 0), (9, 9), (0, 9)]);
        assert_eq!(lattice_point_count(&hull), 100.0);
    }

    #[test]
    fn lattice_count_degenerate_segment() {
        assert_eq!(lattice_point_count(&[(0, 0), (3, 3)]), 4.0);
        assert_eq!(lattice_point_count(&[(2, 5)]), 1.0);
    }

    /// Brute-force O(n^3) hull oracle: an ordered pair (p, q) is a hull edge
    /// iff every other point lies strictly left of the directed line p->q
    /// (or on the segment between them).
    fn brute_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
        let mut pts: Vec<(i64, i64)> = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        let n = pts.len();
        let mut next: std::collections::HashMap<(i64, i64), (i64, i64)> =
            std::collections::HashMap::new();
        for i in 0..n {
            'pair: for j in 0..n {
                if i == j {
                    continue;
                }
                let (p, q) = (pts[i], pts[j]);
                for (k, &r) in pts.iter().enumerate() {
                    if k == i || k == j {
                        continue;
                    }
                    let c = cross(p, q, r);
                    if c < 0 {
                        continue 'pair;
                    }
                    if c == 0 {
                        // Collinear point must lie between p and q.
                        let within = r.0 >= p.0.min(q.0)
                            && r.0 <= p.0.max(q.0)
                            && r.1 >= p.1.min(q.1)
                            && r.1 <= p.1.max(q.1);
                        if !within {
                            continue 'pair;
                        }
                    }
                }
                next.insert(p, q);
            }
        }
        // Walk the edge map starting from the lowest point.
        let start = *pts.iter().min().unwrap();
        let mut ordered = vec![start];
        let mut cur = start;
        while let Some(&q) = next.get(&cur) {
            if q == start {
                break;
            }
            ordered.push(q);
            cur = q;
            if ordered.len() > n {
                break;
            }
        }
        ordered
    }

    #[test]
    fn hull_matches_brute_force_oracle_on_random_disc_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut pts = Vec::new();
        while pts.len() < 100 {
            let x = rng.gen_range(-40i64..=40);
            let y = rng.gen_range(-40i64..=40);
            if x * x + y * y <= 1600 {
                pts.push((x, y));
            }
        }
        let hull = convex_hull(&pts);
        let oracle = brute_hull(&pts);
        let mut h = hull.clone();
        let mut o = oracle.clone();
        h.sort_unstable();
        o.sort_unstable();
        assert_eq!(h, o);
        // Same cyclic order: rotate oracle to hull's first vertex.
        let pos = oracle.iter().position(|&p| p == hull[0]).unwrap();
        let rotated: Vec<_> = oracle[pos..].iter().chain(&oracle[..pos]).copied().collect();
        assert_eq!(hull, rotated);
    }
}
