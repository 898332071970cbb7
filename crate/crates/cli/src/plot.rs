//! SVG picture of the m-Shi arrangement for n = 3.
//!
//! A point `x` of `V` is drawn at `x_1 u_1 + x_2 u_2 + x_3 u_3` with the
//! `u_i` unit vectors at 90, 210 and 330 degrees, so the picture is the
//! plane `V` up to a uniform scale.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use shi_core::bijection::{enumerate_extremal, Kind};
use shi_core::geometry::{centroid, fundamental_alcove_data, RegionSignature};
use shi_core::oracle::bfs_alcoves;
use shi_core::{AffinePerm, NSet, Rational, RationalPoint};

use crate::CliError;


pub enum Highlight {
    /// The region containing this alcove.
    Region(AffinePerm),
    /// Every region whose core lies in the orbit of this alcove's region.
    Orbit(AffinePerm),
}

pub struct Plot {
    pub svg: String,
    pub regions: usize,
    pub highlighted: usize,
}

fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `#rrggbb` for a hue in degrees, saturation and lightness in `[0, 1]`.
fn hsl(h: f64, s: f64, l: f64) -> String {
    let c = (1.0 - (2.0 * l - 1.0).abs()) * s;
    let x = c * (1.0 - ((h / 60.0) % 2.0 - 1.0).abs());
    let (r, g, b) = match (h / 60.0) as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let q = |v: f64| ((v + l - c / 2.0) * 255.0).round() as u8;
    format!("#{:02x}{:02x}{:02x}", q(r), q(g), q(b))
}

fn project(p: &[f64]) -> (f64, f64) {
    const SCALE: f64 = 130.0;
    let s = 3f64.sqrt() / 2.0;
    let x = -s * p[1] + s * p[2];
    let y = p[0] - 0.5 * p[1] - 0.5 * p[2];
    (x * SCALE, -y * SCALE)
}

fn project_point(p: &RationalPoint) -> (f64, f64) {
    let v: Vec<f64> = p.coords().iter().map(to_f64).collect();
    project(&v)
}

fn vertices(w: &AffinePerm) -> Vec<RationalPoint> {
    let (verts, _) = fundamental_alcove_data(3).unwrap();
    verts.iter().map(|v| w.act_on_point(v).unwrap()).collect()
}

/// Parts with repeats written as exponents, e.g. `5²31²`.
fn label(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "\u{2205}".to_string();
    }
    let sup = |k: usize| -> String {
        k.to_string()
            .chars()
            .map(|d| ['\u{2070}', '\u{b9}', '\u{b2}', '\u{b3}', '\u{2074}', '\u{2075}', '\u{2076}', '\u{2077}', '\u{2078}', '\u{2079}'][d as usize - '0' as usize])
            .collect()
    };
    let sep = if parts[0] < 10 { "" } else { "," };
    let mut groups: Vec<String> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let j = parts[i..].iter().take_while(|&&p| p == parts[i]).count();
        groups.push(if j == 1 { parts[i].to_string() } else { format!("{}{}", parts[i], sup(j)) });
        i += j;
    }
    groups.join(sep)
}

type Edge = (Vec<Rational>, Vec<Rational>);

fn edges(w: &AffinePerm) -> Vec<Edge> {
    let v: Vec<Vec<Rational>> = vertices(w).iter().map(|p| p.coords().to_vec()).collect();
    [(0, 1), (1, 2), (0, 2)]
        .iter()
        .map(|&(a, b)| {
            let (p, q) = (v[a].clone(), v[b].clone());
            if p <= q {
                (p, q)
            } else {
                (q, p)
            }
        })
        .collect()
}

fn polygon(points: &[(f64, f64)]) -> String {
    points
        .iter()
        .map(|(x, y)| format!("{x:.2},{y:.2}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn plot(m: usize, highlights: &[Highlight]) -> Result<Plot, CliError> {
    let ctx = Kind::Minimal.context(3, m)?;
    let reach = m as i64 + 2;
    let alcoves: Vec<AffinePerm> = bfs_alcoves(3, 3 * reach as usize + 3)
        .into_iter()
        .filter(|w| {
            let c = centroid(w);
            (1..=3).all(|i| (1..=3).all(|j| c.pair(i, j) < Rational::from_integer(reach)))
        })
        .collect();

    let records = enumerate_extremal(3, m, Kind::Minimal)?;
    let by_region: BTreeMap<RegionSignature, usize> = records
        .iter()
        .enumerate()
        .map(|(i, r)| (RegionSignature::of(&r.w, m), i))
        .collect();

    let mut chosen: BTreeSet<usize> = BTreeSet::new();
    for h in highlights {
        let (w, orbit) = match h {
            Highlight::Region(w) => (w, false),
            Highlight::Orbit(w) => (w, true),
        };
        let index = by_region[&RegionSignature::of(w, m)];
        if orbit {
            let classes: BTreeSet<NSet> = ctx.orbit(&records[index].core).into_iter().collect();
            chosen.extend((0..records.len()).filter(|&i| classes.contains(&records[i].core)));
        } else {
            chosen.insert(index);
        }
    }

    let mut min = (f64::MAX, f64::MAX);
    let mut max = (f64::MIN, f64::MIN);
    for w in &alcoves {
        for p in vertices(w) {
            let (x, y) = project_point(&p);
            min = (min.0.min(x), min.1.min(y));
            max = (max.0.max(x), max.1.max(y));
        }
    }
    let pad = 20.0;
    let (x0, y0) = (min.0 - pad, min.1 - pad);
    let (width, height) = (max.0 - min.0 + 2.0 * pad, max.1 - min.1 + 2.0 * pad);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x0:.2} {y0:.2} {width:.2} {height:.2}" width="{width:.0}" height="{height:.0}">"#
    );
    let _ = writeln!(
        svg,
        r#"<defs><clipPath id="view"><rect x="{x0:.2}" y="{y0:.2}" width="{width:.2}" height="{height:.2}"/></clipPath></defs>"#
    );
    let _ = writeln!(svg, r#"<rect x="{x0:.2}" y="{y0:.2}" width="{width:.2}" height="{height:.2}" fill="white"/>"#);

    let mut members: BTreeMap<usize, Vec<&AffinePerm>> = BTreeMap::new();
    svg.push_str("<g id=\"alcoves\" stroke=\"#c8c8c8\" stroke-width=\"0.6\">\n");
    for w in &alcoves {
        let sig = RegionSignature::of(w, m);
        let index = by_region[&sig];
        members.entry(index).or_default().push(w);
        let hue = (index as f64 * 137.508) % 360.0;
        let light = if sig.is_bounded() { 0.62 } else { 0.86 };
        let pts: Vec<(f64, f64)> = vertices(w).iter().map(project_point).collect();
        let _ = writeln!(
            svg,
            r#"<polygon points="{}" fill="{}"/>"#,
            polygon(&pts),
            hsl(hue, 0.55, light)
        );
    }
    svg.push_str("</g>\n");

    // dominant chamber: cone over omega_1, omega_2
    let far = 3.0 * reach as f64;
    let w1 = project(&[2.0 * far / 3.0, -far / 3.0, -far / 3.0]);
    let w2 = project(&[far / 3.0, far / 3.0, -2.0 * far / 3.0]);
    let _ = writeln!(
        svg,
        r##"<polygon id="dominant" clip-path="url(#view)" points="{}" fill="#000000" fill-opacity="0.12" stroke="#333333" stroke-width="3" stroke-dasharray="8 4"/>"##,
        polygon(&[(0.0, 0.0), w1, w2])
    );

    svg.push_str("<g id=\"shi\" clip-path=\"url(#view)\" stroke=\"#000000\" stroke-width=\"1.6\">\n");
    let span = 4.0 * reach as f64;
    for (i, j, l) in [(0usize, 1usize, 2usize), (1, 2, 0), (0, 2, 1)] {
        for k in -(m as i64) + 1..=m as i64 {
            let mut a = [0.0; 3];
            let mut b = [0.0; 3];
            for (p, s) in [(&mut a, span), (&mut b, -span)] {
                p[i] = k as f64 / 2.0 + s;
                p[j] = -(k as f64) / 2.0 + s;
                p[l] = -2.0 * s;
            }
            let (pa, pb) = (project(&a), project(&b));
            let _ = writeln!(
                svg,
                r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
                pa.0, pa.1, pb.0, pb.1
            );
        }
    }
    svg.push_str("</g>\n");

    if !chosen.is_empty() {
        svg.push_str("<g id=\"highlight\" stroke=\"#d01010\" stroke-width=\"3.5\" stroke-linecap=\"round\">\n");
        for index in &chosen {
            let mut count: BTreeMap<Edge, usize> = BTreeMap::new();
            for w in members.get(index).map(Vec::as_slice).unwrap_or(&[]) {
                for e in edges(w) {
                    *count.entry(e).or_default() += 1;
                }
            }
            for ((p, q), c) in count {
                if c == 1 {
                    let to = |v: &[Rational]| project(&v.iter().map(to_f64).collect::<Vec<_>>());
                    let (pa, pb) = (to(&p), to(&q));
                    let _ = writeln!(
                        svg,
                        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
                        pa.0, pa.1, pb.0, pb.1
                    );
                }
            }
        }
        svg.push_str("</g>\n");
    }

    svg.push_str("<g id=\"labels\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n");
    for r in &records {
        let (x, y) = project_point(&centroid(&r.w));
        let _ = writeln!(
            svg,
            r#"<text x="{x:.2}" y="{y:.2}">{}</text>"#,
            label(r.core.to_partition().parts())
        );
    }
    svg.push_str("</g>\n</svg>\n");

    Ok(Plot {
        svg,
        regions: records.len(),
        highlighted: chosen.len(),
    })
}
