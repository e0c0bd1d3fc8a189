use super::{GrammarError, Nonterminal, NormalForm};

/// CYK membership. Words containing a symbol outside the grammar's
/// terminals are rejected with [`GrammarError::ForeignSymbol`].
pub fn cyk_check(nf: &NormalForm, w: &str) -> Result<bool, GrammarError> {
    if let Some(c) = w.chars().find(|c| !nf.terminals().contains(c)) {
        return Err(GrammarError::ForeignSymbol(c));
    }
    Ok(nf.derives(nf.start(), w))
}

/// CYK membership; foreign symbols make the word a non-member.
pub fn cyk_member(nf: &NormalForm, w: &str) -> bool {
    cyk_check(nf, w).unwrap_or(false)
}

impl NormalForm {
    /// Whether `root` derives `w`. Only the start symbol derives the empty
    /// word, and only when the source grammar did.
    pub fn derives(&self, root: Nonterminal, w: &str) -> bool {
        let word: Vec<char> = w.chars().collect();
        let n = word.len();
        if n == 0 {
            return root == self.start() && self.start_nullable();
        }
        let k = self.nonterminal_count();
        // cell (i, len) covers word[i..i + len]
        let cell = |i: usize, len: usize| (i * n + (len - 1)) * k;
        let mut table = vec![false; n * n * k];
        for (i, c) in word.iter().enumerate() {
            for &(a, t) in self.terminal_rules() {
                if t == *c {
                    table[cell(i, 1) + a] = true;
                }
            }
        }
        for len in 2..=n {
            for i in 0..=(n - len) {
                let target = cell(i, len);
                for split in 1..len {
                    let left = cell(i, split);
                    let right = cell(i + split, len - split);
                    for &(a, b, c) in self.binary_rules() {
                        if table[left + b] && table[right + c] {
                            table[target + a] = true;
                        }
                    }
                }
            }
        }
        table[cell(0, n) + root]
    }
}
