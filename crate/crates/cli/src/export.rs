//! SVG and OFF renderings. Coordinates are converted to `f64` only here,
//! and every number is printed with a fixed precision, so output depends on
//! the complex alone.

use std::fmt::Write;

use simplicia::GeometricComplex;

use crate::commands::Failure;

const CANVAS: f64 = 480.0;
const MARGIN: f64 = 32.0;
const FILLS: [&str; 6] = ["#f4cccc", "#cfe2f3", "#d9ead3", "#fff2cc", "#d9d2e9", "#fce5cd"];

pub fn svg(k: &GeometricComplex) -> Result<String, Failure> {
    if k.ambient_dim() != 2 {
        return Err(Failure::Dimension(format!(
            "svg needs a planar complex, got ambient dimension {}",
            k.ambient_dim()
        )));
    }
    let points: Vec<[f64; 2]> = k
        .vertex_ids()
        .map(|v| {
            let p = k.point(v).to_f64();
            [p[0], p[1]]
        })
        .collect();
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in &points {
        for i in 0..2 {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    let extent = (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let scale = if extent > 0.0 { (CANVAS - 2.0 * MARGIN) / extent } else { 1.0 };
    let screen: Vec<(f64, f64)> =
        points.iter().map(|p| (MARGIN + (p[0] - lo[0]) * scale, CANVAS - MARGIN - (p[1] - lo[1]) * scale)).collect();
    let xy = |v: simplicia::VertexId| screen[v.index()];

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    )
    .unwrap();
    if k.dim() >= 2 {
        out.push_str("<g stroke=\"none\">\n");
        for (i, s) in k.simplices_of_dim(2).iter().enumerate() {
            let pts: Vec<String> = s
                .vertices()
                .iter()
                .map(|&v| {
                    let (x, y) = xy(v);
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            writeln!(out, r#"<polygon points="{}" fill="{}"/>"#, pts.join(" "), FILLS[i % FILLS.len()]).unwrap();
        }
        out.push_str("</g>\n");
    }
    if k.dim() >= 1 {
        out.push_str("<g stroke=\"#333333\" stroke-width=\"1\">\n");
        for s in k.simplices_of_dim(1) {
            let ((x1, y1), (x2, y2)) = (xy(s.vertices()[0]), xy(s.vertices()[1]));
            writeln!(out, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#).unwrap();
        }
        out.push_str("</g>\n");
    }
    if !k.is_empty() {
        out.push_str("<g font-family=\"sans-serif\" font-size=\"9\">\n");
        for v in k.vertex_ids() {
            let (x, y) = xy(v);
            writeln!(out, r##"<circle cx="{x:.3}" cy="{y:.3}" r="2.5" fill="#000000"/>"##).unwrap();
            writeln!(out, r#"<text x="{:.3}" y="{:.3}">{}</text>"#, x + 4.0, y - 4.0, escape(k.label(v))).unwrap();
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// ASCII OFF: vertices padded to three coordinates, then every 2-simplex.
pub fn off(k: &GeometricComplex) -> Result<String, Failure> {
    if k.ambient_dim() > 3 {
        return Err(Failure::Dimension(format!("off needs ambient dimension at most 3, got {}", k.ambient_dim())));
    }
    let faces = if k.dim() >= 2 { k.simplices_of_dim(2) } else { &[] };
    let edges = if k.dim() >= 1 { k.simplices_of_dim(1).len() } else { 0 };
    let mut out = format!("OFF\n{} {} {}\n", k.vertex_count(), faces.len(), edges);
    for v in k.vertex_ids() {
        let mut c = k.point(v).to_f64();
        c.resize(3, 0.0);
        writeln!(out, "{:?} {:?} {:?}", c[0], c[1], c[2]).unwrap();
    }
    for f in faces {
        let ids: Vec<String> = f.vertices().iter().map(|v| v.index().to_string()).collect();
        writeln!(out, "3 {}", ids.join(" ")).unwrap();
    }
    Ok(out)
}
