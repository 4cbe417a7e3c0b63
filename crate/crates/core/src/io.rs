//! Readers and writers for the on-disk formats.
//!
//! * OFF meshes: `OFF`, a count line `nv nf ne`, `nv` coordinate lines, then
//!   faces `k v0 … v{k-1}` with `k ≤ 3`. Lower faces are inferred.
//! * CSV point clouds: one point per row, optionally with a trailing scalar.
//! * Filtration files: `v x y …` lines give vertex coordinates in order, and
//!   `s value a b …` lines give one simplex with its value. Every simplex of
//!   the complex must be listed.
//! * Cycle files: one simplex per line as vertex indices.
//! * OBJ polylines: `v x y z` and `l i j` (1-based) lines.
//!
//! Blank lines and anything after `#` are ignored everywhere. Errors carry
//! the file and 1-based line number.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::complex::{EmbeddedComplex, PointCloud, SimplexRef};
use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::z2linalg::ChainVector;

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

pub fn write_string(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_all<T: FromStr>(path: &Path, line: usize, tokens: &[&str], what: &str) -> Result<Vec<T>> {
    tokens
        .iter()
        .map(|t| t.parse().map_err(|_| Error::parse(path, line, format!("invalid {what} {t:?}"))))
        .collect()
}

fn check_vertices(path: &Path, line: usize, vs: &[usize], n: usize) -> Result<()> {
    match vs.iter().find(|&&v| v >= n) {
        Some(v) => Err(Error::parse(path, line, format!("vertex {v} out of range ({n} vertices)"))),
        None => Ok(()),
    }
}

fn has_repeats(vs: &[usize]) -> bool {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s.windows(2).any(|w| w[0] == w[1])
}

pub fn parse_off(text: &str, path: &Path) -> Result<EmbeddedComplex> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(path, 1, "empty file"))?;
    let mut counts_line = header.strip_prefix("OFF").map(str::trim).unwrap_or(header);
    let mut counts_at = line;
    if counts_line.is_empty() {
        let (l, s) = lines.next().ok_or_else(|| Error::parse(path, line, "missing count line"))?;
        counts_line = s;
        counts_at = l;
    }
    let counts: Vec<usize> = parse_all(path, counts_at, &counts_line.split_whitespace().collect::<Vec<_>>(), "count")?;
    if counts.len() < 2 {
        return Err(Error::parse(path, counts_at, "expected `n_vertices n_faces [n_edges]`"));
    }
    let (nv, nf) = (counts[0], counts[1]);
    let mut points = Vec::with_capacity(nv);
    let mut last = counts_at;
    for _ in 0..nv {
        let (l, s) = lines.next().ok_or_else(|| Error::parse(path, last, format!("expected {nv} vertices")))?;
        points.push(parse_all::<f64>(path, l, &s.split_whitespace().collect::<Vec<_>>(), "coordinate")?);
        last = l;
    }
    let cloud = PointCloud::from_points(points).map_err(|e| Error::parse(path, counts_at, e.to_string()))?;
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (l, s) = lines.next().ok_or_else(|| Error::parse(path, last, format!("expected {nf} faces")))?;
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let k: usize = tokens[0].parse().map_err(|_| Error::parse(path, l, "invalid face size"))?;
        if !(1..=3).contains(&k) {
            return Err(Error::parse(path, l, format!("faces must have 1 to 3 vertices, found {k}")));
        }
        if tokens.len() < k + 1 {
            return Err(Error::parse(path, l, format!("face lists fewer than {k} vertices")));
        }
        let vs: Vec<usize> = parse_all(path, l, &tokens[1..=k], "vertex index")?;
        check_vertices(path, l, &vs, nv)?;
        if has_repeats(&vs) {
            return Err(Error::parse(path, l, "face repeats a vertex"));
        }
        faces.push(vs);
        last = l;
    }
    EmbeddedComplex::from_simplices(cloud, faces)
}

pub fn read_off(path: &Path) -> Result<EmbeddedComplex> {
    parse_off(&read_to_string(path)?, path)
}

pub fn write_off(complex: &EmbeddedComplex) -> String {
    let top: Vec<&Vec<usize>> = (1..=complex.max_dim().min(2)).flat_map(|p| complex.simplices(p)).collect();
    let mut out = String::from("OFF\n");
    writeln!(out, "{} {} 0", complex.n_vertices(), top.len()).unwrap();
    for p in complex.cloud().points() {
        writeln!(out, "{}", join(p)).unwrap();
    }
    for s in top {
        writeln!(out, "{} {}", s.len(), join(s)).unwrap();
    }
    out
}

/// Points from CSV rows. With `scalar_column`, the last column of each row is
/// split off as a per-vertex scalar.
pub fn parse_csv_points(text: &str, path: &Path, scalar_column: bool) -> Result<(PointCloud, Option<Vec<f64>>)> {
    let mut points = Vec::new();
    let mut scalars = Vec::new();
    let mut width = None;
    let mut first_line = 1;
    for (line, s) in content_lines(text) {
        let tokens: Vec<&str> = s.split(',').map(str::trim).collect();
        let mut row: Vec<f64> = parse_all(path, line, &tokens, "number")?;
        match width {
            None => {
                width = Some(row.len());
                first_line = line;
            }
            Some(w) if w != row.len() => {
                return Err(Error::parse(path, line, format!("expected {w} columns, found {}", row.len())))
            }
            _ => {}
        }
        if scalar_column {
            if row.len() < 2 {
                return Err(Error::parse(path, line, "need coordinates and a scalar column"));
            }
            scalars.push(row.pop().unwrap());
        }
        points.push(row);
    }
    let cloud = PointCloud::from_points(points).map_err(|e| Error::parse(path, first_line, e.to_string()))?;
    Ok((cloud, scalar_column.then_some(scalars)))
}

pub fn read_csv_points(path: &Path, scalar_column: bool) -> Result<(PointCloud, Option<Vec<f64>>)> {
    parse_csv_points(&read_to_string(path)?, path, scalar_column)
}

pub fn parse_filtration(text: &str, path: &Path) -> Result<Filtration> {
    let mut points = Vec::new();
    let mut simplices: Vec<(usize, f64, Vec<usize>)> = Vec::new();
    for (line, s) in content_lines(text) {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        match tokens[0] {
            "v" => {
                if !simplices.is_empty() {
                    return Err(Error::parse(path, line, "vertex coordinates must precede simplices"));
                }
                points.push(parse_all::<f64>(path, line, &tokens[1..], "coordinate")?);
            }
            "s" => {
                if tokens.len() < 3 {
                    return Err(Error::parse(path, line, "expected `s value v0 …`"));
                }
                let value: f64 = tokens[1]
                    .parse()
                    .ok()
                    .filter(|v: &f64| v.is_finite())
                    .ok_or_else(|| Error::parse(path, line, format!("invalid value {:?}", tokens[1])))?;
                let mut vs: Vec<usize> = parse_all(path, line, &tokens[2..], "vertex index")?;
                check_vertices(path, line, &vs, points.len())?;
                if has_repeats(&vs) {
                    return Err(Error::parse(path, line, "simplex repeats a vertex"));
                }
                vs.sort_unstable();
                simplices.push((line, value, vs));
            }
            other => return Err(Error::parse(path, line, format!("unknown record {other:?}, expected `v` or `s`"))),
        }
    }
    let cloud = PointCloud::from_points(points).map_err(|e| Error::parse(path, 1, e.to_string()))?;
    let complex = EmbeddedComplex::from_simplices(cloud, simplices.iter().map(|(_, _, vs)| vs.clone()))?;
    let mut values: HashMap<SimplexRef, (usize, f64)> = HashMap::new();
    for (line, value, vs) in &simplices {
        let s = complex.index_of(vs).expect("listed simplex");
        if values.insert(s, (*line, *value)).is_some() {
            return Err(Error::parse(path, *line, "simplex listed twice"));
        }
    }
    for s in complex.iter() {
        let Some(&(line, value)) = values.get(&s) else {
            return Err(Error::parse(
                path,
                simplices.iter().find(|(_, _, vs)| is_face(complex.simplex(s), vs)).map_or(1, |t| t.0),
                format!("face {:?} is not listed", complex.simplex(s)),
            ));
        };
        if s.dim > 0 {
            for &f in complex.facets(s) {
                let (_, fv) = values[&SimplexRef::new(s.dim - 1, f)];
                if fv > value {
                    return Err(Error::parse(path, line, format!("value {value} is below a face's value {fv}")));
                }
            }
        }
    }
    Filtration::from_values(complex, |s| values[&s].1)
}

fn is_face(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.contains(v))
}

pub fn read_filtration(path: &Path) -> Result<Filtration> {
    parse_filtration(&read_to_string(path)?, path)
}

pub fn write_filtration(filtration: &Filtration) -> String {
    let complex = filtration.complex();
    let mut out = String::new();
    for p in complex.cloud().points() {
        writeln!(out, "v {}", join(p)).unwrap();
    }
    for (i, &s) in filtration.order().iter().enumerate() {
        writeln!(out, "s {} {}", filtration.value_at(i), join(complex.simplex(s))).unwrap();
    }
    out
}

/// A `p`-cycle given as simplices; rejected unless every simplex exists and
/// the boundary vanishes.
pub fn parse_cycle(text: &str, path: &Path, complex: &EmbeddedComplex, p: usize) -> Result<ChainVector> {
    let mut support = Vec::new();
    for (line, s) in content_lines(text) {
        let mut vs: Vec<usize> = parse_all(path, line, &s.split_whitespace().collect::<Vec<_>>(), "vertex index")?;
        if vs.len() != p + 1 {
            return Err(Error::parse(path, line, format!("expected {} vertices for a {p}-simplex", p + 1)));
        }
        vs.sort_unstable();
        let s = complex
            .index_of(&vs)
            .ok_or_else(|| Error::parse(path, line, format!("{vs:?} is not a simplex of the complex")))?;
        support.push(s.pos);
    }
    let chain = ChainVector::from_indices(complex.n_simplices(p), support)?;
    if !complex.is_cycle(p, &chain)? {
        return Err(Error::NotACycle);
    }
    Ok(chain)
}

pub fn read_cycle(path: &Path, complex: &EmbeddedComplex, p: usize) -> Result<ChainVector> {
    parse_cycle(&read_to_string(path)?, path, complex, p)
}

pub fn write_cycle(complex: &EmbeddedComplex, p: usize, chain: &ChainVector) -> String {
    complex.chain_simplices(p, chain).iter().map(|s| join(s) + "\n").collect()
}

/// OBJ polyline of a 1-chain. Only the chain's vertices are written; missing
/// coordinates are padded with zeros up to three.
pub fn write_obj(complex: &EmbeddedComplex, chain: &ChainVector) -> String {
    let vertices = complex.chain_vertices(1, chain);
    let local: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
    let mut out = String::new();
    for &v in &vertices {
        let mut c = complex.cloud().point(v).to_vec();
        c.resize(c.len().max(3), 0.0);
        writeln!(out, "v {}", join(&c)).unwrap();
    }
    for e in complex.chain_simplices(1, chain) {
        writeln!(out, "l {} {}", local[&e[0]], local[&e[1]]).unwrap();
    }
    out
}

/// Vertex coordinates and 0-based line segments.
pub type Polyline = (Vec<Vec<f64>>, Vec<[usize; 2]>);

pub fn parse_obj(text: &str, path: &Path) -> Result<Polyline> {
    let mut vertices = Vec::new();
    let mut segments = Vec::new();
    for (line, s) in content_lines(text) {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        match tokens[0] {
            "v" => vertices.push(parse_all::<f64>(path, line, &tokens[1..], "coordinate")?),
            "l" => {
                let idx: Vec<usize> = parse_all(path, line, &tokens[1..], "vertex index")?;
                if idx.len() < 2 || idx.iter().any(|&i| i == 0 || i > vertices.len()) {
                    return Err(Error::parse(path, line, "invalid polyline"));
                }
                segments.extend(idx.windows(2).map(|w| [w[0] - 1, w[1] - 1]));
            }
            _ => {}
        }
    }
    Ok((vertices, segments))
}

/// Maps an OBJ polyline back onto `complex` by matching coordinates.
pub fn obj_to_chain(complex: &EmbeddedComplex, vertices: &[Vec<f64>], segments: &[[usize; 2]]) -> Result<ChainVector> {
    let tol = complex.cloud().tolerance();
    let lookup = |c: &[f64]| {
        (0..complex.n_vertices()).find(|&v| {
            let p = complex.cloud().point(v);
            c.iter().enumerate().all(|(k, x)| (p.get(k).copied().unwrap_or(0.0) - x).abs() <= tol)
        })
    };
    let ids: Vec<usize> = vertices
        .iter()
        .map(|c| lookup(c).ok_or_else(|| Error::InvalidComplex(format!("no vertex at {c:?}"))))
        .collect::<Result<_>>()?;
    let mut support = Vec::new();
    for &[a, b] in segments {
        let mut e = [ids[a], ids[b]];
        e.sort_unstable();
        let s = complex.index_of(&e).ok_or_else(|| Error::InvalidComplex(format!("no edge {e:?}")))?;
        support.push(s.pos);
    }
    ChainVector::from_indices(complex.n_simplices(1), support)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "OFF\n# hollow\n3 3 0\n0 0 0\n1 0 0\n0.5 0.8 0\n2 0 1\n2 1 2\n2 0 2\n";

    #[test]
    fn off_round_trip() {
        let p = Path::new("t.off");
        let k = parse_off(TRIANGLE, p).unwrap();
        assert_eq!((k.n_vertices(), k.n_simplices(1), k.n_simplices(2)), (3, 3, 0));
        let again = parse_off(&write_off(&k), p).unwrap();
        assert_eq!(again.simplices(1), k.simplices(1));
    }

    #[test]
    fn off_errors_carry_lines() {
        let p = Path::new("bad.off");
        let err = parse_off("OFF\n2 1 0\n0 0\n1 0\n4 0 1 0 1\n", p).unwrap_err();
        assert!(err.to_string().starts_with("bad.off:5:"), "{err}");
        let err = parse_off("OFF\n2 1 0\n0 0\n1 0\n2 0 7\n", p).unwrap_err();
        assert!(err.to_string().contains("out of range"));
        let err = parse_off("OFF\n2 1 0\n0 0\n1 x\n2 0 1\n", p).unwrap_err();
        assert!(err.to_string().starts_with("bad.off:4:"), "{err}");
    }

    #[test]
    fn csv_points_and_scalars() {
        let p = Path::new("p.csv");
        let (c, s) = parse_csv_points("# x,y,f\n0,0,1\n1,0,2\n\n0,1,3\n", p, true).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(s.unwrap(), vec![1.0, 2.0, 3.0]);
        let err = parse_csv_points("0,0\n1,0,2\n", p, false).unwrap_err();
        assert!(err.to_string().starts_with("p.csv:2:"));
        assert!(parse_csv_points("0,0\n0,0\n", p, false).is_err());
    }

    #[test]
    fn filtration_file() {
        let p = Path::new("f.flt");
        let text = "v 0 0\nv 1 0\nv 0 1\ns 0 0\ns 0 1\ns 0 2\ns 1 0 1\ns 1 1 2\ns 2 0 2\ns 3 0 1 2\n";
        let f = parse_filtration(text, p).unwrap();
        assert_eq!(f.len(), 7);
        assert_eq!(parse_filtration(&write_filtration(&f), p).unwrap().order(), f.order());
        let missing = "v 0 0\nv 1 0\ns 0 0\ns 1 0 1\n";
        assert!(parse_filtration(missing, p).unwrap_err().to_string().contains("not listed"));
        let decreasing = "v 0 0\nv 1 0\ns 0 0\ns 2 1\ns 1 0 1\n";
        assert!(parse_filtration(decreasing, p).unwrap_err().to_string().starts_with("f.flt:5:"));
    }

    #[test]
    fn cycle_file_is_validated() {
        let p = Path::new("c.txt");
        let k = parse_off(TRIANGLE, p).unwrap();
        let z = parse_cycle("0 1\n2 1\n0 2\n", p, &k, 1).unwrap();
        assert_eq!(z.weight(), 3);
        assert!(matches!(parse_cycle("0 1\n1 2\n", p, &k, 1), Err(Error::NotACycle)));
        assert!(parse_cycle("0 1 2\n", p, &k, 1).is_err());
        assert_eq!(parse_cycle(&write_cycle(&k, 1, &z), p, &k, 1).unwrap(), z);
    }

    #[test]
    fn obj_round_trip() {
        let p = Path::new("c.obj");
        let k = parse_off(TRIANGLE, p).unwrap();
        let z = ChainVector::new(3, vec![0, 1, 2]).unwrap();
        let (v, l) = parse_obj(&write_obj(&k, &z), p).unwrap();
        assert_eq!(obj_to_chain(&k, &v, &l).unwrap(), z);
    }
}
