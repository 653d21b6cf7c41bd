//! Random instance generators shared by the integration suites.
#![allow(dead_code)]

use linklab::geometry::{determinant, int, sign_of, Point, Point3, Point4, Scalar, Tri4, Triangle};
use linklab::linking::{GeomCycle1, GeomCycle2};
use rand::Rng;

pub fn p3(x: i64, y: i64, z: i64) -> Point3 {
    Point::from_ints([x, y, z])
}

pub fn p4(x: i64, y: i64, z: i64, w: i64) -> Point4 {
    Point::from_ints([x, y, z, w])
}

pub fn random_point<const N: usize, R: Rng>(rng: &mut R, bound: i64) -> Point<N> {
    Point::from_ints(std::array::from_fn(|_| rng.gen_range(-bound..=bound)))
}

/// A simple closed polygon with 3 to 5 vertices.
pub fn random_polygon<const N: usize, R: Rng>(rng: &mut R, bound: i64) -> GeomCycle1<N> {
    loop {
        let n = rng.gen_range(3..=5);
        if let Ok(c) = GeomCycle1::new((0..n).map(|_| random_point(rng, bound)).collect()) {
            return c;
        }
    }
}

fn disjoint3(a: &GeomCycle1<3>, b: &GeomCycle1<3>) -> bool {
    use linklab::geometry::{seg_seg_classify, SegSegClass};
    a.segments()
        .iter()
        .all(|s| b.segments().iter().all(|t| seg_seg_classify(s, t) == SegSegClass::Disjoint))
}

/// Two disjoint polygons. The second starts at a point near the first's
/// centroid, so a fair share of pairs are linked.
pub fn random_polygon_pair<R: Rng>(rng: &mut R) -> (GeomCycle1<3>, GeomCycle1<3>) {
    loop {
        let a = random_polygon::<3, _>(rng, 10);
        let c = Point::centroid(a.points());
        let mut pts: Vec<Point3> = vec![c.translate(&random_point::<3, _>(rng, 2).0)];
        for _ in 0..rng.gen_range(2..=4) {
            pts.push(random_point(rng, 12));
        }
        let Ok(b) = GeomCycle1::new(pts) else { continue };
        if disjoint3(&a, &b) {
            return (a, b);
        }
    }
}

/// The double cone of the triangle boundary `rim` over `top` and `bottom`.
pub fn suspended_triangle(rim: &[Point4; 3], top: &Point4, bottom: &Point4) -> Result<GeomCycle2, linklab::linking::LinkingError> {
    let mut tris: Vec<Tri4> = Vec::new();
    for i in 0..3 {
        let (x, y) = (rim[i].clone(), rim[(i + 1) % 3].clone());
        tris.push(Triangle {
            vertices: [x.clone(), y.clone(), top.clone()],
        });
        tris.push(Triangle {
            vertices: [y, x, bottom.clone()],
        });
    }
    GeomCycle2::new(tris)
}

/// A suspension-shaped sphere and a disjoint triangle threaded near its rim disk.
pub fn random_sphere_link<R: Rng>(rng: &mut R) -> (GeomCycle1<4>, GeomCycle2) {
    use linklab::geometry::seg_tri_meets4;
    loop {
        let rim: [Point4; 3] = std::array::from_fn(|_| random_point(rng, 10));
        let (top, bottom) = (random_point(rng, 10), random_point(rng, 10));
        let Ok(c2) = suspended_triangle(&rim, &top, &bottom) else { continue };
        let m = Point::centroid(&rim);
        let d = random_point::<4, _>(rng, 6);
        let pts = vec![m.translate(&d.0), m.translate(&linklab::geometry::neg(&d.0)), random_point(rng, 15)];
        let Ok(c1) = GeomCycle1::new(pts) else { continue };
        if c1.segments().iter().any(|s| c2.triangles().iter().any(|t| seg_tri_meets4(s, t))) {
            continue;
        }
        return (c1, c2);
    }
}

/// An invertible integer matrix and the sign of its determinant.
pub fn random_matrix<const N: usize, R: Rng>(rng: &mut R) -> ([[Scalar; N]; N], i8) {
    loop {
        let m: [[Scalar; N]; N] = std::array::from_fn(|_| std::array::from_fn(|_| int(rng.gen_range(-3..=3))));
        // Columns of the transpose have the same determinant.
        let cols: [[Scalar; N]; N] = std::array::from_fn(|j| std::array::from_fn(|i| m[i][j].clone()));
        let s = sign_of(&determinant(&cols));
        if s != 0 {
            return (m, s);
        }
    }
}

/// A point strictly inside segment `i` of `c`.
pub fn point_on_segment<const N: usize, R: Rng>(rng: &mut R, c: &GeomCycle1<N>, i: usize) -> Point<N> {
    let s = &c.segments()[i];
    let t = linklab::geometry::ratio(rng.gen_range(1..=9), 10);
    s.start.lerp(&s.end, &t)
}
