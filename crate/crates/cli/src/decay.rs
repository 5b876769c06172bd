use std::collections::BTreeMap;

use num::Zero;
use simplicia::rational::format_significant;
use simplicia::{barycentric_subdivide_n, bound_after, mesh_value, GeometricComplex, Length, MetricKind};

pub struct Row {
    pub m: usize,
    pub simplices: usize,
    /// Maximal simplices by dimension.
    pub census: BTreeMap<usize, usize>,
    pub mesh: Length,
    pub bound: Length,
}

impl Row {
    /// `mesh / bound`, absent when the bound is zero.
    pub fn ratio(&self) -> Option<Length> {
        let bound = self.bound.raw();
        (!bound.is_zero()).then(|| Length::from_raw(self.mesh.metric(), self.mesh.raw() / bound))
    }
}

pub fn rows(k: &GeometricComplex, n: usize, metric: MetricKind) -> Vec<Row> {
    let initial = mesh_value(k, metric);
    let mut current = k.clone();
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m > 0 {
            current = barycentric_subdivide_n(&current, 1);
        }
        out.push(Row {
            m,
            simplices: current.len(),
            census: current.facet_census(),
            mesh: mesh_value(&current, metric),
            bound: bound_after(&initial, k.dim(), m),
        });
    }
    out
}

pub fn number(x: &Length, exact: bool) -> String {
    if exact {
        x.to_exact_string()
    } else {
        format_significant(x.to_f64(), 6)
    }
}

fn cells(row: &Row, exact: bool) -> [String; 6] {
    let census: Vec<String> = row.census.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    [
        row.m.to_string(),
        row.simplices.to_string(),
        census.join(" "),
        number(&row.mesh, exact),
        number(&row.bound, exact),
        row.ratio().map_or_else(|| "-".to_string(), |r| number(&r, exact)),
    ]
}

const HEADER: [&str; 6] = ["m", "simplices", "maximal", "mesh", "bound", "ratio"];

pub fn render_text(rows: &[Row], exact: bool) -> String {
    let table: Vec<[String; 6]> = rows.iter().map(|r| cells(r, exact)).collect();
    let mut widths = HEADER.map(str::len);
    for row in &table {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: [&str; 6]| {
        let padded: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:>w$}")).collect();
        format!("{}\n", padded.join("  "))
    };
    let mut out = line(HEADER);
    for row in &table {
        out += &line(row.each_ref().map(String::as_str));
    }
    out
}

pub fn render_csv(rows: &[Row], exact: bool) -> String {
    let mut out = format!("{}\n", HEADER.join(","));
    for row in rows {
        out += &format!("{}\n", cells(row, exact).join(","));
    }
    out
}
