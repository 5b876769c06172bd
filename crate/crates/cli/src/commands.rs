use std::fmt;
use std::fs;
use std::path::Path;

use simplicia::io::{from_json_str, to_json_string};
use simplicia::rational::{format_rational, parse_rational};
use simplicia::{
    barycentric_subdivide, barycentric_subdivide_n, induced_subdivision_with, is_subdivision, open_star,
    subdivisions_needed, validate_complex, CarrierLocator, Error, GeometricComplex, MetricKind, Point,
    SubdivisionCheck,
};

use crate::decay;

/// A failed command, carrying its exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
    Invalid(String),
    Dimension(String),
    Check(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Io(_) => 2,
            Failure::Invalid(_) => 3,
            Failure::Dimension(_) => 4,
            Failure::Check(_) => 5,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, msg) = match self {
            Failure::Usage(m) => ("usage", m),
            Failure::Io(m) => ("i/o", m),
            Failure::Invalid(m) => ("invalid complex", m),
            Failure::Dimension(m) => ("unsupported dimension", m),
            Failure::Check(m) => ("check failed", m),
        };
        write!(f, "error ({kind}): {}", msg.trim_end())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::ParseRational(_) => Failure::Usage(e.to_string()),
            Error::DimensionMismatch { .. } => Failure::Dimension(e.to_string()),
            Error::NotASubdivision(_) | Error::BoundViolated(_) => Failure::Check(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<GeometricComplex, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    from_json_str(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

/// Reads a complex and rejects it unless it is valid.
pub fn load(path: &Path) -> Result<GeometricComplex, Failure> {
    let k = read(path)?;
    let report = validate_complex(&k);
    if report.is_valid() {
        Ok(k)
    } else {
        Err(Failure::Invalid(format!("{}:\n{report}", path.display())))
    }
}

pub fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn f_vector(k: &GeometricComplex) -> String {
    let parts: Vec<String> = k.f_vector().iter().map(usize::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn validate(path: &Path) -> Result<String, Failure> {
    let k = read(path)?;
    let report = validate_complex(&k);
    if report.is_valid() {
        Ok(format!("valid: f-vector {}\n", f_vector(&k)))
    } else {
        Err(Failure::Invalid(report.to_string()))
    }
}

pub fn closure(path: &Path) -> Result<String, Failure> {
    Ok(to_json_string(&load(path)?))
}

pub fn bsd(path: &Path, n: usize) -> Result<String, Failure> {
    Ok(to_json_string(&barycentric_subdivide_n(&load(path)?, n)))
}

pub fn star(path: &Path, vertex: &str) -> Result<String, Failure> {
    let k = load(path)?;
    let v = k.vertex_by_label(vertex).ok_or_else(|| Failure::Usage(format!("no vertex `{vertex}`")))?;
    let st = open_star(&k, v)?;
    Ok(st.pieces.iter().map(|s| format!("{}\n", k.display(s))).collect())
}

pub fn carrier(path: &Path, point: &str) -> Result<String, Failure> {
    let k = load(path)?;
    let coords: Vec<&str> = point.split(',').map(str::trim).collect();
    let x = Point::parse(&coords)?;
    if x.dim() != k.ambient_dim() {
        return Err(Failure::Usage(format!(
            "point has {} coordinates, the complex lives in dimension {}",
            x.dim(),
            k.ambient_dim()
        )));
    }
    let locator = CarrierLocator::new(&k)?;
    Ok(match locator.locate(&x)? {
        None => "outside\n".to_string(),
        Some(found) => {
            let mut out = format!("carrier {}\n", k.display(&found.carrier));
            for (v, w) in &found.weights {
                out += &format!("{} {}\n", k.label(*v), format_rational(w));
            }
            out
        }
    })
}

pub fn induced(path: &Path, sub: &Path, fine: Option<&Path>) -> Result<String, Failure> {
    let k = load(path)?;
    let k0 = load(sub)?;
    let (fine, witness) = match fine {
        None => barycentric_subdivide(&k),
        Some(p) => {
            let fine = load(p)?;
            match is_subdivision(&fine, &k)? {
                SubdivisionCheck::Holds(w) => (fine, w),
                SubdivisionCheck::Refuted(r) => return Err(Failure::Check(r.to_string())),
            }
        }
    };
    Ok(to_json_string(&induced_subdivision_with(&fine, &k0, &k, &witness)?))
}

pub fn check_subdivision(path: &Path, fine: &Path) -> Result<String, Failure> {
    let k = load(path)?;
    let l = load(fine)?;
    match is_subdivision(&l, &k)? {
        SubdivisionCheck::Holds(w) => {
            let mut out = String::from("holds\n");
            for s in k.maximal() {
                out += &format!("{} covered by {}\n", k.display(s), w.covering[s].len());
            }
            Ok(out)
        }
        SubdivisionCheck::Refuted(r) => {
            let mut msg = r.to_string();
            if let Some(gap) = r.volume_deficit(&k) {
                msg += &format!("\nmissing volume {}", format_rational(&gap));
            }
            Err(Failure::Check(msg))
        }
    }
}

pub fn mesh(path: &Path, metric: MetricKind, exact: bool) -> Result<String, Failure> {
    let k = load(path)?;
    let m = simplicia::mesh_value(&k, metric);
    Ok(format!("{}\n", decay::number(&m, exact)))
}

pub fn decay(
    path: &Path,
    n: usize,
    metric: MetricKind,
    eps: Option<&str>,
    csv: bool,
    exact: bool,
) -> Result<String, Failure> {
    let k = load(path)?;
    let eps = eps.map(parse_rational).transpose()?;
    let rows = decay::rows(&k, n, metric);
    let mut out = if csv { decay::render_csv(&rows, exact) } else { decay::render_text(&rows, exact) };
    if let Some(eps) = eps {
        let count = subdivisions_needed(&k, &eps, metric)?;
        let sep = if csv { "," } else { " = " };
        out += &format!(
            "\nN_bound{sep}{}\nN_actual{sep}{}\ncertified_mesh{sep}{}\n",
            count.bound,
            count.actual,
            decay::number(&count.certified_mesh, exact)
        );
    }
    Ok(out)
}
