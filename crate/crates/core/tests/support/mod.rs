//! Test-only oracles that share no code with the library.
#![allow(dead_code)]

use std::collections::HashMap;
use std::path::Path;
use std::process::Command;

use kaplansky_core::Group;

// ---------------------------------------------------------------------------
// A bounded SMT-LIB interpreter.
//
// Handles the fragment the emitter produces: Int constants, `assert`, the
// Boolean connectives, `=`, `<=`, `<`, `+`, `-`, `*`, `mod`, and `exists` /
// `forall` whose bodies start with a range guard. Declared constants are
// enumerated over the ranges asserted for them, every assertion is checked,
// and the script is sat iff some assignment satisfies all of them.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
pub enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ';' => {
                for c in chars.by_ref() {
                    if c == '\n' {
                        break;
                    }
                }
            }
            '(' | ')' => {
                out.push(c.to_string());
                chars.next();
            }
            '|' => {
                chars.next();
                let mut s = String::new();
                for c in chars.by_ref() {
                    if c == '|' {
                        break;
                    }
                    s.push(c);
                }
                out.push(s);
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            _ => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' {
                        break;
                    }
                    s.push(c);
                    chars.next();
                }
                out.push(s);
            }
        }
    }
    out
}

fn parse_all(tokens: &[String]) -> Vec<Sexp> {
    fn one(tokens: &[String], pos: &mut usize) -> Sexp {
        let t = &tokens[*pos];
        *pos += 1;
        if t == "(" {
            let mut items = Vec::new();
            while tokens[*pos] != ")" {
                items.push(one(tokens, pos));
            }
            *pos += 1;
            Sexp::List(items)
        } else {
            Sexp::Atom(t.clone())
        }
    }
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < tokens.len() {
        out.push(one(tokens, &mut pos));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Val {
    Int(i64),
    Bool(bool),
}

impl Val {
    fn int(self) -> i64 {
        match self {
            Val::Int(n) => n,
            Val::Bool(_) => panic!("expected Int"),
        }
    }
    fn bool(self) -> bool {
        match self {
            Val::Bool(b) => b,
            Val::Int(_) => panic!("expected Bool"),
        }
    }
}

fn atom(s: &Sexp) -> &str {
    match s {
        Sexp::Atom(a) => a,
        Sexp::List(_) => panic!("expected an atom, got {s:?}"),
    }
}

/// `(<= 0 v)` / `(< v n)` pairs in a guard, giving the range of each variable.
fn guard_ranges(guard: &Sexp, out: &mut HashMap<String, (i64, i64)>) {
    let Sexp::List(items) = guard else { return };
    match atom(&items[0]) {
        "and" => items[1..].iter().for_each(|g| guard_ranges(g, out)),
        "<=" => {
            let lo: i64 = atom(&items[1]).parse().unwrap();
            out.entry(atom(&items[2]).to_string()).or_insert((0, 0)).0 = lo;
        }
        "<" => {
            let hi: i64 = atom(&items[2]).parse().unwrap();
            out.entry(atom(&items[1]).to_string()).or_insert((0, 0)).1 = hi;
        }
        _ => {}
    }
}

fn eval(e: &Sexp, env: &mut HashMap<String, i64>) -> Val {
    match e {
        Sexp::Atom(a) => match a.as_str() {
            "true" => Val::Bool(true),
            "false" => Val::Bool(false),
            _ => match a.parse::<i64>() {
                Ok(n) => Val::Int(n),
                Err(_) => Val::Int(*env.get(a).unwrap_or_else(|| panic!("unbound {a}"))),
            },
        },
        Sexp::List(items) => {
            let args = &items[1..];
            match atom(&items[0]) {
                "and" => Val::Bool(args.iter().all(|a| eval(a, env).bool())),
                "or" => Val::Bool(args.iter().any(|a| eval(a, env).bool())),
                "not" => Val::Bool(!eval(&args[0], env).bool()),
                "=>" => Val::Bool(!eval(&args[0], env).bool() || eval(&args[1], env).bool()),
                "=" => Val::Bool(eval(&args[0], env) == eval(&args[1], env)),
                "<=" => Val::Bool(eval(&args[0], env).int() <= eval(&args[1], env).int()),
                "<" => Val::Bool(eval(&args[0], env).int() < eval(&args[1], env).int()),
                "+" => Val::Int(args.iter().map(|a| eval(a, env).int()).sum()),
                "*" => Val::Int(args.iter().map(|a| eval(a, env).int()).product()),
                "-" if args.len() == 1 => Val::Int(-eval(&args[0], env).int()),
                "-" => Val::Int(eval(&args[0], env).int() - eval(&args[1], env).int()),
                "mod" => Val::Int(
                    eval(&args[0], env)
                        .int()
                        .rem_euclid(eval(&args[1], env).int()),
                ),
                q @ ("exists" | "forall") => {
                    let Sexp::List(decls) = &args[0] else {
                        panic!()
                    };
                    let names: Vec<String> = decls
                        .iter()
                        .map(|d| match d {
                            Sexp::List(p) => atom(&p[0]).to_string(),
                            _ => panic!(),
                        })
                        .collect();
                    let Sexp::List(body) = &args[1] else { panic!() };
                    let mut ranges = HashMap::new();
                    guard_ranges(&body[1], &mut ranges);
                    let ranges: Vec<(i64, i64)> = names.iter().map(|n| ranges[n]).collect();
                    let want = q == "exists";
                    let saved: Vec<Option<i64>> =
                        names.iter().map(|n| env.get(n).copied()).collect();
                    let found = enumerate(&names, &ranges, env, &mut |env| {
                        eval(&args[1], env).bool() == want
                    });
                    for (n, s) in names.iter().zip(saved) {
                        match s {
                            Some(v) => env.insert(n.clone(), v),
                            None => env.remove(n),
                        };
                    }
                    Val::Bool(if want { found } else { !found })
                }
                op => panic!("unsupported operator {op}"),
            }
        }
    }
}

/// Calls `f` on every assignment (first name most significant) until it
/// returns true.
fn enumerate(
    names: &[String],
    ranges: &[(i64, i64)],
    env: &mut HashMap<String, i64>,
    f: &mut dyn FnMut(&mut HashMap<String, i64>) -> bool,
) -> bool {
    if ranges.iter().any(|(lo, hi)| lo >= hi) {
        return false;
    }
    for (n, (lo, _)) in names.iter().zip(ranges) {
        env.insert(n.clone(), *lo);
    }
    loop {
        if f(env) {
            return true;
        }
        let mut i = names.len();
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            let v = env.get_mut(&names[i]).unwrap();
            *v += 1;
            if *v < ranges[i].1 {
                break;
            }
            *v = ranges[i].0;
        }
    }
}

/// Satisfiability of an emitted script, by enumeration.
pub fn smt_interpret(script: &str) -> bool {
    let cmds = parse_all(&tokenize(script));
    let mut consts = Vec::new();
    let mut asserts = Vec::new();
    let mut saw_check = false;
    for cmd in &cmds {
        let Sexp::List(items) = cmd else {
            panic!("stray atom")
        };
        match atom(&items[0]) {
            "set-info" | "set-logic" => {}
            "declare-const" => {
                assert_eq!(atom(&items[2]), "Int");
                consts.push(atom(&items[1]).to_string());
            }
            "assert" => asserts.push(items[1].clone()),
            "check-sat" => saw_check = true,
            other => panic!("unsupported command {other}"),
        }
    }
    assert!(saw_check, "script has no check-sat");
    let mut ranges = HashMap::new();
    for a in &asserts {
        guard_ranges(a, &mut ranges);
    }
    let ranges: Vec<(i64, i64)> = consts
        .iter()
        .map(|c| {
            *ranges
                .get(c)
                .unwrap_or_else(|| panic!("{c} has no asserted range"))
        })
        .collect();
    let mut env = HashMap::new();
    enumerate(&consts, &ranges, &mut env, &mut |env| {
        asserts.iter().all(|a| eval(a, env).bool())
    })
}

/// `Some(sat)` from z3 when it is installed, `None` otherwise.
pub fn z3_check(script: &str, dir: &Path, name: &str) -> Option<bool> {
    let path = dir.join(format!("{name}.smt2"));
    std::fs::write(&path, script).ok()?;
    let out = Command::new("z3").arg("-T:60").arg(&path).output().ok()?;
    match String::from_utf8_lossy(&out.stdout).trim() {
        "sat" => Some(true),
        "unsat" => Some(false),
        other => panic!("z3 answered {other:?} on {name}"),
    }
}

// ---------------------------------------------------------------------------
// Naive arithmetic oracles.
// ---------------------------------------------------------------------------

/// Arithmetic in `Z/p` on plain integers.
pub fn conv_mod_p(g: &Group, p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = g.order();
    let mut out = vec![0u64; n];
    for x in 0..n {
        for y in 0..n {
            out[g.mul(x, y)] += a[x] as u64 * b[y] as u64;
        }
    }
    out.into_iter().map(|c| (c % p as u64) as u32).collect()
}

/// `d × d` matrices over `Z/p[G]`, dense layout `((i*d + j)*n + g)`.
pub fn mat_mul_mod_p(g: &Group, p: u32, d: usize, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = g.order();
    let mut out = vec![0u32; d * d * n];
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let prod = conv_mod_p(g, p, &a[(i * d + k) * n..][..n], &b[(k * d + j) * n..][..n]);
                for (o, c) in out[(i * d + j) * n..][..n].iter_mut().zip(prod) {
                    *o = (*o + c) % p;
                }
            }
        }
    }
    out
}

pub fn is_identity_dense(d: usize, n: usize, m: &[u32]) -> bool {
    (0..d).all(|i| {
        (0..d).all(|j| (0..n).all(|g| m[(i * d + j) * n + g] == u32::from(i == j && g == 0)))
    })
}

/// Every element of `(Z/p)^len`, first coordinate most significant.
pub fn all_vectors(p: u32, len: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as u64).pow(len as u32);
    (0..total).map(move |mut i| {
        let mut v = vec![0; len];
        for x in v.iter_mut().rev() {
            *x = (i % p as u64) as u32;
            i /= p as u64;
        }
        v
    })
}

/// Brute-force answer to "is there A, B supported in S with AB = 1, BA ≠ 1",
/// enumerating both matrices (prime fields only).
pub fn brute_stable_witness(g: &Group, p: u32, d: usize, support: &[usize]) -> bool {
    let n = g.order();
    let m = support.len();
    let spread = |v: &[u32]| {
        let mut dense = vec![0u32; d * d * n];
        for cell in 0..d * d {
            for (si, &s) in support.iter().enumerate() {
                dense[cell * n + s] = v[cell * m + si];
            }
        }
        dense
    };
    let mats: Vec<Vec<u32>> = all_vectors(p, d * d * m).map(|v| spread(&v)).collect();
    mats.iter().any(|a| {
        mats.iter().any(|b| {
            is_identity_dense(d, n, &mat_mul_mod_p(g, p, d, a, b))
                && !is_identity_dense(d, n, &mat_mul_mod_p(g, p, d, b, a))
        })
    })
}
