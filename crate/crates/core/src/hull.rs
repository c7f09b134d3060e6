//! Incremental convex hull of points on the unit sphere.
//!
//! For points in convex position the hull facets are exactly the spherical
//! Delaunay triangles. Facets are returned counterclockwise seen from outside.

use std::collections::{HashMap, HashSet};

use crate::scalar::{cross, dot, norm, scale, sub, Real};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum HullShape {
    /// Full-rank hull.
    Solid(Vec<[usize; 3]>),
    /// All points on one small circle: both faces of the flat polygon.
    Flat(Vec<[usize; 3]>),
    /// All points on one great circle; carries the unit normal of that plane.
    GreatCircle([f64; 3]),
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct HullFailure(pub String);

fn orient<T: Real>(p: &[[T; 3]], f: [usize; 3], q: [T; 3]) -> T {
    let a = p[f[0]];
    dot(cross(sub(p[f[1]], a), sub(p[f[2]], a)), sub(q, a))
}

pub(crate) fn hull<T: Real>(p: &[[T; 3]]) -> Result<HullShape, HullFailure> {
    let n = p.len();
    if n < 2 {
        return Err(HullFailure(format!("{n} points")));
    }
    if n == 2 {
        return Ok(HullShape::GreatCircle(plane_of_pair(p[0], p[1])));
    }

    // Initial simplex: largest triangle on (0, 1, k), then the farthest point
    // off its plane. Ties go to the lowest index.
    let (a, b) = (0usize, 1usize);
    let mut c = usize::MAX;
    let mut best = T::zero();
    for k in 2..n {
        let area = norm(cross(sub(p[b], p[a]), sub(p[k], p[a])));
        if area > best {
            best = area;
            c = k;
        }
    }
    if c == usize::MAX {
        return Err(HullFailure("all points collinear".into()));
    }
    let mut d = usize::MAX;
    let mut best = T::zero();
    for k in 2..n {
        if k == c {
            continue;
        }
        let o = orient(p, [a, b, c], p[k]).abs();
        if o > best {
            best = o;
            d = k;
        }
    }
    if d == usize::MAX || best <= T::HULL_EPS {
        return Ok(flat_hull(p, [a, b, c]));
    }

    let centroid = scale(
        [0, 1, 2].map(|i| p[a][i] + p[b][i] + p[c][i] + p[d][i]),
        T::lit(0.25),
    );
    let mut faces: Vec<[usize; 3]> = Vec::with_capacity(2 * n);
    for f in [[a, b, c], [a, b, d], [a, c, d], [b, c, d]] {
        if orient(p, f, centroid) > T::zero() {
            faces.push([f[0], f[2], f[1]]);
        } else {
            faces.push(f);
        }
    }

    for q in 0..n {
        if q == a || q == b || q == c || q == d {
            continue;
        }
        let scores: Vec<T> = faces.iter().map(|&f| orient(p, f, p[q])).collect();
        // Visible region: facets seeing q, grown from the most exposed one
        // across shared edges so that it stays connected. A point numerically
        // on the surface still replaces its most exposed facet.
        let start = scores
            .iter()
            .enumerate()
            .fold((0, T::neg_infinity()), |acc, (i, &s)| if s > acc.1 { (i, s) } else { acc })
            .0;
        let owner: HashMap<(usize, usize), usize> =
            faces.iter().enumerate().flat_map(|(i, f)| (0..3).map(move |k| ((f[k], f[(k + 1) % 3]), i))).collect();
        let mut visible = vec![false; faces.len()];
        visible[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let f = faces[i];
            for k in 0..3 {
                if let Some(&j) = owner.get(&(f[(k + 1) % 3], f[k])) {
                    if !visible[j] && scores[j] > T::HULL_EPS {
                        visible[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        let mut edges = HashSet::new();
        for (f, _) in faces.iter().zip(&visible).filter(|(_, &v)| v) {
            for k in 0..3 {
                edges.insert((f[k], f[(k + 1) % 3]));
            }
        }
        let mut next = Vec::with_capacity(faces.len() + 4);
        let mut horizon = Vec::new();
        for (f, &v) in faces.iter().zip(&visible) {
            if v {
                for k in 0..3 {
                    let (u, w) = (f[k], f[(k + 1) % 3]);
                    if !edges.contains(&(w, u)) {
                        horizon.push((u, w));
                    }
                }
            } else {
                next.push(*f);
            }
        }
        for (u, w) in horizon {
            next.push([u, w, q]);
        }
        faces = next;
    }

    check_closed(n, &faces)?;
    Ok(HullShape::Solid(faces))
}

/// Every directed edge must be matched by its reverse, and V - E + F = 2.
fn check_closed(n: usize, faces: &[[usize; 3]]) -> Result<(), HullFailure> {
    let mut edges = HashSet::new();
    let mut used = vec![false; n];
    for f in faces {
        for k in 0..3 {
            used[f[k]] = true;
            if !edges.insert((f[k], f[(k + 1) % 3])) {
                return Err(HullFailure(format!("edge {:?} used twice", (f[k], f[(k + 1) % 3]))));
            }
        }
    }
    if let Some(&(u, w)) = edges.iter().find(|&&(u, w)| !edges.contains(&(w, u))) {
        return Err(HullFailure(format!("edge ({u}, {w}) has no twin")));
    }
    if let Some(i) = used.iter().position(|&u| !u) {
        return Err(HullFailure(format!("point {i} missing from hull")));
    }
    let euler = n as i64 - (edges.len() / 2) as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(HullFailure(format!("Euler characteristic {euler}")));
    }
    Ok(())
}

fn plane_of_pair<T: Real>(u: [T; 3], v: [T; 3]) -> [f64; 3] {
    let c = cross(u, v);
    let nc = norm(c);
    if nc > T::lit(1e-9) {
        return [c[0], c[1], c[2]].map(|x| (x / nc).as_f64());
    }
    // Antipodal pair: any plane through both works; pick one orthogonal to u
    // containing the projection of the x axis (or y axis) onto u-perp.
    let u = u.map(|x| x.as_f64());
    for e in [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]] {
        let d = dot(e, u);
        let t = sub(e, scale(u, d));
        if norm(t) > 1e-6 {
            let w = cross(u, scale(t, 1.0 / norm(t)));
            return scale(w, 1.0 / norm(w));
        }
    }
    unreachable!("x and y axes cannot both be parallel to u")
}

fn flat_hull<T: Real>(p: &[[T; 3]], tri: [usize; 3]) -> HullShape {
    let [a, b, c] = tri;
    let nrm = cross(sub(p[b], p[a]), sub(p[c], p[a]));
    let nrm = scale(nrm, T::one() / norm(nrm));
    let offset = dot(nrm, p[a]);
    if offset.abs() <= T::lit(1e-12).max(T::HULL_EPS) {
        return HullShape::GreatCircle(nrm.map(|x| x.as_f64()));
    }
    // Orient the normal toward the points' side and sort them around it.
    let nrm = if offset < T::zero() { scale(nrm, -T::one()) } else { nrm };
    let seed = if nrm[0].abs() < T::lit(0.9) { [T::one(), T::zero(), T::zero()] } else { [T::zero(), T::one(), T::zero()] };
    let e1 = sub(seed, scale(nrm, dot(seed, nrm)));
    let e1 = scale(e1, T::one() / norm(e1));
    let e2 = cross(nrm, e1);
    let mut order: Vec<usize> = (0..p.len()).collect();
    let ang: Vec<T> = p.iter().map(|q| dot(*q, e2).atan2(dot(*q, e1))).collect();
    order.sort_by(|&i, &j| ang[i].partial_cmp(&ang[j]).unwrap().then(i.cmp(&j)));
    let mut faces = Vec::with_capacity(2 * p.len());
    for k in 1..order.len() - 1 {
        faces.push([order[0], order[k], order[k + 1]]);
        faces.push([order[0], order[k + 1], order[k]]);
    }
    HullShape::Flat(faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_has_eight_facets() {
        let p = [[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, -1.0]];
        match hull(&p).unwrap() {
            HullShape::Solid(f) => assert_eq!(f.len(), 8),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_circle_is_flat() {
        let z: f64 = 0.5;
        let s = (1.0 - z * z).sqrt();
        let p: Vec<[f64; 3]> = (0..5)
            .map(|k| {
                let t = k as f64 * 1.2566370614359172;
                [s * t.cos(), s * t.sin(), z]
            })
            .collect();
        match hull(&p).unwrap() {
            HullShape::Flat(f) => assert_eq!(f.len(), 6),
            other => panic!("{other:?}"),
        }
    }
}
