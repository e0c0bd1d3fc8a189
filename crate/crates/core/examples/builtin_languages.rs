//! The shipped recognizers, selectable by name.
//!
//! ```text
//! cargo run --example builtin_languages
//! ```

use langreach::languages::{Builtin, LangAView, Membership};

fn main() {
    let samples: [(Builtin, &[&str]); 5] = [
        (Builtin::D2, &["([])()", "([)]", ""]),
        (Builtin::Dd2, &["(ab)", "(a[cd]b)", "(ba)"]),
        (Builtin::NbcD2, &["({(#)}", "{(#(}"]),
        (Builtin::LangA, &["10#1#1#0", "10#1#0#0", "00#0#0#0"]),
        (Builtin::AbStar, &["", "abab", "ba"]),
    ];
    for (lang, words) in samples {
        let verdicts: Vec<String> = words.iter().map(|w| format!("{w:?}={}", lang.accepts(w))).collect();
        println!("{:7} {}", lang.name(), verdicts.join("  "));
    }

    // lang-a strings carry a vertex-cover certificate: budget, adjacency, cover.
    let view: LangAView = "110#111#1#1#0".parse().unwrap();
    println!("\ntriangle certificate: n = {}, k = {}, cover bits {:?}, member: {}", view.n, view.k, view.cover_bits, view.is_member());
}
