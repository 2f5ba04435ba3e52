//! ASCII pictures: restricted Dynkin diagrams of domains and Satake-style
//! lines for k-indices.

use crate::domains::{IrreducibleDomain, SystemType};
use crate::rational::KIndex;

const OPEN: char = '○';
const FILLED: char = '●';

/// Nodes at every fourth column, joined by `---` except for the last edge.
fn chain(nodes: &[String], last_edge: &str) -> String {
    let mut line = String::new();
    for (i, n) in nodes.iter().enumerate() {
        if i > 0 {
            line.push_str(if i + 1 == nodes.len() { last_edge } else { "---" });
        }
        line.push_str(n);
    }
    line
}

fn labels(names: &[String]) -> String {
    let mut line = String::new();
    for (i, n) in names.iter().enumerate() {
        let col = 4 * i;
        while line.chars().count() < col {
            line.push(' ');
        }
        line.push_str(n);
        line.push(' ');
    }
    line.trim_end().to_string()
}

/// A vertex drawn above node `at` (0-based) and joined to it.
fn branch_above(mark: char, at: usize) -> String {
    let pad = " ".repeat(4 * at);
    format!("{pad}{mark}\n{pad}|\n")
}

/// The restricted root system with nodes `η1 … ηt`; the double edge points
/// at the shorter root.
pub fn restricted_diagram(d: &IrreducibleDomain) -> String {
    let rd = d.restricted_root_datum();
    let t = rd.t as usize;
    let nodes = vec!["o".to_string(); t];
    let last = match rd.system_type {
        SystemType::C => "<==",
        SystemType::BC => "==>",
    };
    let names: Vec<String> = (1..=t).map(|i| format!("η{i}")).collect();
    let mut out = format!("{}{} for {d}\n", rd.system_type, rd.t);
    out.push_str(&chain(&nodes, last));
    out.push('\n');
    out.push_str(&labels(&names));
    out.push('\n');
    out.push_str(&format!(
        "multiplicities: ξi±ξj {}, 2ξi {}, ξi {}\n",
        rd.mult_short_pair, rd.mult_long, rd.mult_very_short
    ));
    out
}

enum Shape {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

/// Absolute type and distinguished vertices (1-based, Bourbaki numbering).
fn satake(ix: &KIndex) -> (Shape, usize, Vec<usize>, Option<&'static str>) {
    let folded = Some("outer form: vertex i is paired with its mirror image");
    match *ix {
        KIndex::A2 { d, n, s } => {
            let mut v: Vec<usize> = (1..=s).flat_map(|j| [(j * d) as usize, (n + 1 - j * d) as usize]).collect();
            v.sort_unstable();
            v.dedup();
            (Shape::A, n as usize, v, folded)
        }
        KIndex::ASplit { n, q } => {
            let mut v: Vec<usize> = (1..=q).flat_map(|j| [j as usize, (n + 1 - j) as usize]).collect();
            v.sort_unstable();
            v.dedup();
            (Shape::A, n as usize, v, folded)
        }
        KIndex::D2Inner { n, s } => (Shape::D, n as usize, (1..=s as usize).map(|j| 2 * j).collect(), None),
        KIndex::D2Outer { n, s } => (
            Shape::D,
            n as usize,
            (1..=s as usize).map(|j| 2 * j).collect(),
            Some("outer form: the two end vertices of the fork are exchanged"),
        ),
        KIndex::C2 { n, s } => (Shape::C, n as usize, (1..=s as usize).map(|j| 2 * j).collect(), None),
        KIndex::C1 { n } => (Shape::C, n as usize, (1..=n as usize).collect(), None),
        KIndex::IV { n, s } => {
            let dims = n as usize + 2;
            let shape = if dims % 2 == 1 { Shape::B } else { Shape::D };
            (shape, dims / 2, (1..=s as usize).collect(), None)
        }
        KIndex::E6_28 => (Shape::E6, 6, vec![2], folded),
        KIndex::E7_31 => (Shape::E7, 7, vec![1, 6], None),
    }
}

/// Absolute Dynkin diagram with open vertices for the distinguished orbits
/// and filled vertices for the anisotropic kernel.
pub fn index_diagram(ix: &KIndex) -> String {
    let (shape, rank, open, note) = satake(ix);
    let mark = |v: usize| if open.contains(&v) { OPEN } else { FILLED }.to_string();
    let num = |v: usize| v.to_string();
    let mut out = format!("{} = {}\n", ix, ix.display_name());
    let (above, row): (Option<(usize, usize)>, Vec<usize>) = match shape {
        Shape::A | Shape::B | Shape::C => (None, (1..=rank).collect()),
        Shape::D if rank >= 3 => (Some((rank, rank - 3)), (1..rank).collect()),
        Shape::D => (None, (1..=rank).collect()),
        Shape::E6 => (Some((2, 2)), vec![1, 3, 4, 5, 6]),
        Shape::E7 => (Some((2, 2)), vec![1, 3, 4, 5, 6, 7]),
    };
    if let Some((v, at)) = above {
        out.push_str(&branch_above(mark(v).chars().next().unwrap(), at));
    }
    let last = match shape {
        Shape::B => "==>",
        Shape::C => "<==",
        _ => "---",
    };
    let marks: Vec<String> = row.iter().map(|&v| mark(v)).collect();
    out.push_str(&chain(&marks, last));
    out.push('\n');
    out.push_str(&labels(&row.iter().map(|&v| num(v)).collect::<Vec<_>>()));
    out.push('\n');
    if let Some((v, _)) = above {
        out.push_str(&format!("vertex {v} is drawn above\n"));
    }
    if let Some(n) = note {
        out.push_str(n);
        out.push('\n');
    }
    out.push_str(&format!("k-rank {}: {OPEN} distinguished, {FILLED} anisotropic\n", ix.rank()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restricted() {
        let d: IrreducibleDomain = "III(3)".parse().unwrap();
        let pic = restricted_diagram(&d);
        let lines: Vec<&str> = pic.lines().collect();
        assert_eq!(lines[1], "o---o<==o");
        assert_eq!(lines[2], "η1  η2  η3");
        let one = restricted_diagram(&"I(1,1)".parse().unwrap());
        assert_eq!(one.lines().nth(1), Some("o"));
    }

    #[test]
    fn indices() {
        let pic = index_diagram(&"2A(3;11,2)".parse().unwrap());
        assert!(pic.contains("●---●---○---●---●---○---●---●---○---●---●"));
        let pic = index_diagram(&KIndex::E7_31);
        assert!(pic.contains("○---●---●---●---○---●"));
        let pic = index_diagram(&"C2(4,2)".parse().unwrap());
        assert!(pic.contains("●---○---●<==○"));
    }
}
