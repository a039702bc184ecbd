//! Plain-text and TikZ drawings. Diagrams run up the page: the source is at
//! the bottom and slices are stacked upwards.

use std::fmt::Write as _;
use std::ops::Range;

use crate::diagram::{Diagram, Move, Slice, SliceBody};
use crate::twocell::{Cell, Script};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Ascii,
    Tikz,
}

impl std::str::FromStr for Target {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(Target::Ascii),
            "tikz" => Ok(Target::Tikz),
            _ => Err(format!("unknown format `{s}` (expected ascii or tikz)")),
        }
    }
}

pub fn render_diagram(d: &Diagram, t: Target) -> String {
    match t {
        Target::Ascii => ascii(d, &(0..0)),
        Target::Tikz => {
            let mut out = String::new();
            tikz_picture(&mut out, d, None);
            out
        }
    }
}

pub fn render_script(s: &Script, t: Target) -> String {
    let traj = match s.trajectory() {
        Ok(t) => t,
        Err(e) => return format!("{e}\n"),
    };
    let mut out = String::new();
    match t {
        Target::Ascii => {
            for (i, c) in s.cells.iter().enumerate() {
                writeln!(out, "step {i}: {c}").unwrap();
                out.push_str(&ascii(&traj[i], &site(c, &traj[i])));
                out.push('\n');
            }
            writeln!(out, "result:").unwrap();
            out.push_str(&ascii(traj.last().unwrap(), &(0..0)));
        }
        Target::Tikz => {
            for (i, c) in s.cells.iter().enumerate() {
                writeln!(out, "% step {i}: {c}").unwrap();
                tikz_picture(&mut out, &traj[i], Some(site(c, &traj[i])));
                out.push_str("$\\Rightarrow$\n");
            }
            tikz_picture(&mut out, traj.last().unwrap(), None);
        }
    }
    out
}

/// The slices a cell acts on.
pub fn site(c: &Cell, d: &Diagram) -> Range<usize> {
    let r = match c {
        Cell::Interchange { at, .. } => *at..at + 2,
        Cell::GenCell { gen, at, back, .. } => *at..at + if *back { gen.tgt.len() } else { gen.src.len() },
        Cell::StructMove(m) => match *m {
            Move::Cancel { at } | Move::Transpose { at } => at..at + 2,
            Move::Insert { at, .. } => at..at,
            Move::SlideUp { at, len } => at..at + len + 1,
            Move::SlideDown { at, len } => at.saturating_sub(len)..at + 1,
        },
    };
    r.start.min(d.len())..r.end.min(d.len())
}

fn span(s: &Slice) -> usize {
    s.body.dom_len().max(s.body.cod_len()).max(1)
}

fn column_width(d: &Diagram) -> usize {
    let mut w = 4;
    for l in d.levels() {
        for x in l.letters() {
            w = w.max(x.chars().count() + 2);
        }
    }
    for s in d.slices() {
        if let SliceBody::Gen { id, .. } = &s.body {
            w = w.max((id.chars().count() + 3).div_ceil(span(s)));
        }
    }
    w
}

struct Canvas {
    rows: Vec<Vec<char>>,
}

impl Canvas {
    fn row(&mut self, width: usize) -> usize {
        self.rows.push(vec![' '; width]);
        self.rows.len() - 1
    }

    fn put(&mut self, r: usize, x: usize, s: &str) {
        for (i, c) in s.chars().enumerate() {
            let row = &mut self.rows[r];
            if x + i >= row.len() {
                row.resize(x + i + 1, ' ');
            }
            row[x + i] = c;
        }
    }
}

fn ascii(d: &Diagram, marked: &Range<usize>) -> String {
    let w = column_width(d);
    let levels = d.levels();
    let width = levels.iter().map(|l| l.len()).max().unwrap_or(0).max(1) * w + w;
    let col = |i: usize| 2 + i * w;
    let mut cv = Canvas { rows: Vec::new() };
    let wires = |cv: &mut Canvas, n: usize| {
        let r = cv.row(width);
        for i in 0..n {
            cv.put(r, col(i), "|");
        }
        r
    };
    let labels = |cv: &mut Canvas, k: usize| {
        let r = cv.row(width);
        if levels[k].is_empty() {
            cv.put(r, col(0), "1");
        }
        for (i, x) in levels[k].letters().iter().enumerate() {
            cv.put(r, col(i), x);
        }
    };

    // Built top to bottom.
    labels(&mut cv, d.len());
    for k in (0..d.len()).rev() {
        let s = &d.slices()[k];
        let first = wires(&mut cv, levels[k + 1].len());
        let (l, sp) = (s.left.len(), span(s));
        match &s.body {
            SliceBody::Gen { id, .. } => {
                let r = cv.row(width);
                for i in 0..l {
                    cv.put(r, col(i), "|");
                }
                let (x0, x1) = (col(l) - 1, col(l + sp - 1) + 1);
                let inner = x1 - x0 - 1;
                let pad = inner.saturating_sub(id.chars().count());
                cv.put(r, x0, &format!("[{}{}{}]", " ".repeat(pad / 2), id, " ".repeat(pad - pad / 2)));
                for i in 0..s.right.len() {
                    cv.put(r, col(l + sp + i), "|");
                }
            }
            SliceBody::Braid(..) => {
                let (a, b) = (col(l), col(l + 1));
                let mid = (a + b) / 2;
                let others = |cv: &mut Canvas, r: usize| {
                    for i in (0..l).chain(l + 2..l + 2 + s.right.len()) {
                        cv.put(r, col(i), "|");
                    }
                };
                let r = cv.row(width);
                others(&mut cv, r);
                cv.put(r, a + 1, "\\");
                cv.put(r, b - 1, "/");
                let r = cv.row(width);
                others(&mut cv, r);
                cv.put(r, mid, "X");
                let r = cv.row(width);
                others(&mut cv, r);
                cv.put(r, a + 1, "/");
                cv.put(r, b - 1, "\\");
            }
        }
        let last = wires(&mut cv, levels[k].len());
        if marked.contains(&k) {
            for r in first..=last {
                cv.put(r, 0, ">");
            }
        }
    }
    if d.is_identity() {
        wires(&mut cv, levels[0].len());
    }
    labels(&mut cv, 0);

    let mut out = String::new();
    let mut prev_blank = false;
    for row in &cv.rows {
        let line: String = row.iter().collect::<String>().trim_end().to_string();
        // Consecutive wire-only rows between slices collapse into one.
        let blank = line.chars().all(|c| c == '|' || c == ' ' || c == '>');
        if blank && prev_blank {
            continue;
        }
        prev_blank = blank;
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn num(x: f64) -> String {
    format!("{x}")
}

fn tex_name(s: &str) -> String {
    s.replace('_', "\\_")
}

fn tikz_picture(out: &mut String, d: &Diagram, mark: Option<Range<usize>>) {
    let levels = d.levels();
    let width = levels.iter().map(|l| l.len()).max().unwrap_or(0).max(1);
    out.push_str("\\begin{tikzpicture}[yscale=0.6, baseline=(current bounding box.center)]\n");
    for (i, x) in levels[0].letters().iter().enumerate() {
        writeln!(out, "  \\node[below] at ({i},0) {{$\\scriptstyle {}$}};", tex_name(x)).unwrap();
    }
    if d.is_identity() {
        for i in 0..levels[0].len() {
            writeln!(out, "  \\draw ({i},0) -- ({i},1);").unwrap();
        }
    }
    for (k, s) in d.slices().iter().enumerate() {
        let (y0, y1) = (k as f64, k as f64 + 1.0);
        let l = s.left.len();
        for i in 0..l {
            writeln!(out, "  \\draw ({i},{}) -- ({i},{});", num(y0), num(y1)).unwrap();
        }
        match &s.body {
            SliceBody::Gen { id, .. } => {
                let (dn, cn) = (s.body.dom_len(), s.body.cod_len());
                let cx = l as f64 + (span(s) as f64 - 1.0) / 2.0;
                let cy = y0 + 0.5;
                for i in 0..dn {
                    writeln!(out, "  \\draw ({},{}) -- ({},{});", l + i, num(y0), num(cx), num(cy)).unwrap();
                }
                for i in 0..cn {
                    writeln!(out, "  \\draw ({},{}) -- ({},{});", num(cx), num(cy), l + i, num(y1)).unwrap();
                }
                writeln!(out, "  \\node[draw, fill=white, inner sep=2pt] at ({},{}) {{$\\scriptstyle {}$}};", num(cx), num(cy), tex_name(id))
                    .unwrap();
                for j in 0..s.right.len() {
                    writeln!(out, "  \\draw ({},{}) -- ({},{});", l + dn + j, num(y0), l + cn + j, num(y1)).unwrap();
                }
            }
            SliceBody::Braid(..) => {
                let (a, b) = (l, l + 1);
                writeln!(out, "  \\draw ({a},{}) .. controls ({a},{}) and ({b},{}) .. ({b},{});", num(y0), num(y0 + 0.5), num(y0 + 0.5), num(y1))
                    .unwrap();
                writeln!(out, "  \\draw ({b},{}) .. controls ({b},{}) and ({a},{}) .. ({a},{});", num(y0), num(y0 + 0.5), num(y0 + 0.5), num(y1))
                    .unwrap();
                for j in 0..s.right.len() {
                    writeln!(out, "  \\draw ({},{}) -- ({},{});", l + 2 + j, num(y0), l + 2 + j, num(y1)).unwrap();
                }
            }
        }
    }
    let top = d.len().max(1);
    for (i, x) in levels[d.len()].letters().iter().enumerate() {
        writeln!(out, "  \\node[above] at ({i},{top}) {{$\\scriptstyle {}$}};", tex_name(x)).unwrap();
    }
    if let Some(r) = mark {
        writeln!(
            out,
            "  \\draw[green!60!black, thick, rounded corners] ({},{}) rectangle ({},{});",
            num(-0.4),
            num(r.start as f64 + 0.05),
            num(width as f64 - 0.6),
            num(r.end.max(r.start + 1) as f64 - 0.05)
        )
        .unwrap();
    }
    out.push_str("\\end{tikzpicture}\n");
}
