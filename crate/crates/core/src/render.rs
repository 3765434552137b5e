//! Two-row pictures of functions and split equivalences: sources on the top
//! row, targets on the bottom row. Text art for terminals, DOT for Graphviz.

use std::fmt::Write;

use crate::finfun::FinFun;
use crate::gen::SplitEq;

fn row(label: &str, cells: impl IntoIterator<Item = String>, width: usize) -> String {
    let mut line = format!("{label:>7}:");
    for cell in cells {
        let _ = write!(line, " {cell:>width$}");
    }
    line
}

fn cell_width(values: impl IntoIterator<Item = usize>) -> usize {
    values
        .into_iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
}

/// Sources, the image of each source beneath it, then the targets.
///
/// ```text
///  source: 0 1
///   image: 2 1
///  target: 0 1 2
/// ```
pub fn finfun_text(f: &FinFun) -> String {
    let width = cell_width((0..f.src().max(f.tgt())).chain(f.table().iter().copied()));
    let mut s = String::new();
    let _ = writeln!(s, "{}", row("source", (0..f.src()).map(|i| i.to_string()), width));
    let _ = writeln!(s, "{}", row("image", f.table().iter().map(|v| v.to_string()), width));
    let _ = writeln!(s, "{}", row("target", (0..f.tgt()).map(|j| j.to_string()), width));
    s
}

/// Base-26 class names: a, b, …, z, aa, ab, …
fn class_name(mut c: usize) -> String {
    let mut name = Vec::new();
    loop {
        name.push(b'a' + (c % 26) as u8);
        if c < 26 {
            break;
        }
        c = c / 26 - 1;
    }
    name.reverse();
    String::from_utf8(name).expect("ascii")
}

/// Each position labelled by the name of its class.
///
/// ```text
///  source: a b
///  target: a a b
/// ```
pub fn spliteq_text(r: &SplitEq) -> String {
    let labels = r.labels();
    let names: Vec<String> = labels.iter().map(|&c| class_name(c)).collect();
    let width = names.iter().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    let _ = writeln!(s, "{}", row("source", names[..r.src()].iter().cloned(), width));
    let _ = writeln!(s, "{}", row("target", names[r.src()..].iter().cloned(), width));
    s
}

fn dot_rows(s: &mut String, src: usize, tgt: usize) {
    let _ = writeln!(s, "  node [shape=circle, fixedsize=true, width=0.3, fontsize=10];");
    for (prefix, len) in [("s", src), ("t", tgt)] {
        let _ = write!(s, "  {{ rank=same;");
        for i in 0..len {
            let _ = write!(s, " {prefix}{i} [label=\"{i}\"];");
        }
        let _ = writeln!(s, " }}");
    }
}

fn dot_order(s: &mut String, src: usize, tgt: usize, arrow: &str) {
    for (prefix, len) in [("s", src), ("t", tgt)] {
        for i in 1..len {
            let _ = writeln!(s, "  {prefix}{} {arrow} {prefix}{i} [style=invis];", i - 1);
        }
    }
}

pub fn finfun_dot(f: &FinFun) -> String {
    let mut s = String::from("digraph finfun {\n  rankdir=TB;\n");
    dot_rows(&mut s, f.src(), f.tgt());
    dot_order(&mut s, f.src(), f.tgt(), "->");
    for (i, &j) in f.table().iter().enumerate() {
        let _ = writeln!(s, "  s{i} -> t{j};");
    }
    s.push_str("}\n");
    s
}

pub fn spliteq_dot(r: &SplitEq) -> String {
    let node = |x: usize| {
        if x < r.src() {
            format!("s{x}")
        } else {
            format!("t{}", x - r.src())
        }
    };
    let mut s = String::from("graph spliteq {\n  rankdir=TB;\n");
    dot_rows(&mut s, r.src(), r.tgt());
    dot_order(&mut s, r.src(), r.tgt(), "--");
    for class in r.classes() {
        for pair in class.windows(2) {
            let _ = writeln!(s, "  {} -- {};", node(pair[0]), node(pair[1]));
        }
    }
    s.push_str("}\n");
    s
}
