use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use torelli_core::freegroup::generator_name;
use torelli_core::johnson::{self, DEFAULT_DEPTH_CUTOFF, DEFAULT_TOWER_MAX};
use torelli_core::library::{library, TorelliWord};
use torelli_core::lie::{lyndon_basis, witt_dim};
use torelli_core::present::{eta_block_ranks, present_filled, present_mapping_torus};
use torelli_core::spin::{self, enumerate_forms, DescriptorKind};
use torelli_core::syntax::{parse_form, parse_input, Input};
use torelli_core::{Error, MappingClass, Result};

#[derive(Parser)]
#[command(name = "torelli", version, about = "Johnson filtration and Birman-Craggs invariants of surface mapping classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Lyndon,
    Monomial,
}

#[derive(Subcommand)]
enum Command {
    /// Largest k with f in J(k), up to a cutoff.
    Depth {
        #[arg(short = 'i')]
        input: PathBuf,
        #[arg(long = "max-k", default_value_t = DEFAULT_DEPTH_CUTOFF)]
        max_k: usize,
    },
    /// The Johnson homomorphism tau_k(f).
    Tau {
        #[arg(short = 'i')]
        input: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, value_enum, default_value = "lyndon")]
        basis: Basis,
    },
    /// tau_k for k = kmin.. until the first nonzero level.
    TauTower {
        #[arg(short = 'i')]
        input: PathBuf,
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
        #[arg(long = "max-k", default_value_t = DEFAULT_TOWER_MAX)]
        max_k: usize,
    },
    /// Whether f and h agree modulo J(2k-1).
    Bordant {
        #[arg(short = 'i', num_args = 1, required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Bracket of the tensor form of tau_k(f); must vanish.
    MoritaCheck {
        #[arg(short = 'i')]
        input: PathBuf,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Birman-Craggs values of a Torelli word.
    Bc {
        #[arg(short = 'i')]
        input: PathBuf,
        #[arg(long)]
        form: Option<String>,
        #[arg(long = "all-forms")]
        all_forms: bool,
    },
    /// tau_2 together with every Arf-0 Birman-Craggs value.
    Eta2 {
        #[arg(short = 'i')]
        input: PathBuf,
    },
    /// Quadratic forms of a given genus.
    Forms {
        #[arg(long)]
        genus: usize,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        arf: Option<u8>,
    },
    /// Lyndon basis and Witt dimension of the degree-k free Lie ring on 2g letters.
    Lie {
        #[arg(long)]
        genus: usize,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Presentation of the mapping torus, or of its filling.
    Present {
        #[arg(short = 'i')]
        input: PathBuf,
        #[arg(long)]
        filled: bool,
    },
    /// Ranks of the spin-bordism blocks.
    Blocks {
        #[arg(long)]
        genus: usize,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Built-in Torelli generators.
    Gens {
        #[arg(long)]
        genus: usize,
    },
    /// Validation report of a mapping class.
    Validate {
        #[arg(short = 'i')]
        input: PathBuf,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

fn load(path: &Path) -> Result<Input> {
    let text = read(path)?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    parse_input(&text, &|p: &str| read(&dir.join(p)))
}

fn load_action(path: &Path) -> Result<MappingClass> {
    load(path)?.action()
}

fn load_word(path: &Path) -> Result<TorelliWord> {
    match load(path)? {
        Input::Tor(t) => Ok(t.word),
        Input::Map(_) => Err(Error::InvalidDescriptor(format!("{} is a .map file; a Torelli word is required", path.display()))),
    }
}

fn describe(d: &DescriptorKind) -> String {
    match d {
        DescriptorKind::Bscc { pairs } => {
            let p: String = pairs.iter().map(|(x, y)| format!("({x} {y})")).collect();
            format!("bscc pairs {p}")
        }
        DescriptorKind::Bp { curve_class, pair } => format!("bp class {curve_class} pair ({} {})", pair.0, pair.1),
    }
}

fn run(cmd: Command) -> Result<String> {
    let mut out = String::new();
    match cmd {
        Command::Depth { input, max_k } => {
            let r = johnson::filtration_depth(&load_action(&input)?, max_k)?;
            out.push_str(&r.to_string());
        }
        Command::Tau { input, k, basis } => {
            let t = johnson::tau(&load_action(&input)?, k)?;
            match basis {
                Basis::Lyndon => out.push_str(&t.to_string()),
                Basis::Monomial => {
                    let _ = writeln!(out, "tau k={} genus={}", t.degree(), t.genus());
                    let rank = 2 * t.genus();
                    for (i, c) in t.components().iter().enumerate() {
                        let _ = writeln!(out, "[{}]", generator_name(i as u32 + 1, rank));
                        out.push_str(&c.to_series().to_string());
                    }
                }
            }
        }
        Command::TauTower { input, k, max_k } => {
            out.push_str(&johnson::tau_tower(&load_action(&input)?, k, max_k)?.to_string());
        }
        Command::Bordant { inputs, k } => {
            let [f, h] = inputs.as_slice() else {
                return Err(Error::InvalidDescriptor(format!("bordant takes two -i inputs, got {}", inputs.len())));
            };
            let b = johnson::bordant(&load_action(f)?, &load_action(h)?, k)?;
            let _ = writeln!(out, "bordant k={k}: {b}");
        }
        Command::MoritaCheck { input, k } => {
            let (ok, b) = johnson::morita_check(&load_action(&input)?, k)?;
            let _ = writeln!(out, "morita k={k}: {}", if ok { "pass" } else { "FAIL" });
            let _ = write!(out, "bracket:\n{b}");
        }
        Command::Bc { input, form, all_forms } => {
            let word = load_word(&input)?;
            let kinds = word.descriptors()?;
            match form {
                Some(text) if !all_forms => {
                    let q = parse_form(&text)?;
                    if q.genus() != word.genus() {
                        return Err(Error::GenusMismatch { left: word.genus(), right: q.genus() });
                    }
                    let v = spin::rho(q, kinds.iter().copied())?;
                    let _ = writeln!(out, "rho = {}", v as u8);
                }
                Some(_) => return Err(Error::InvalidDescriptor("--form and --all-forms are exclusive".into())),
                None => {
                    for q in enumerate_forms(word.genus(), Some(false))? {
                        let v = spin::rho(q, kinds.iter().copied())?;
                        let _ = writeln!(out, "{q} -> {}", v as u8);
                    }
                }
            }
        }
        Command::Eta2 { input } => {
            out.push_str(&spin::eta2(&load_word(&input)?)?.to_string());
        }
        Command::Forms { genus, arf } => {
            let forms = enumerate_forms(genus, arf.map(|a| a == 1))?;
            for q in &forms {
                let _ = writeln!(out, "{q}");
            }
            let _ = writeln!(out, "count {}", forms.len());
        }
        Command::Lie { genus, k } => {
            if genus == 0 {
                return Err(Error::InvalidGenus(genus));
            }
            if k == 0 {
                return Err(Error::InvalidDegree(k));
            }
            for w in lyndon_basis(2 * genus, k) {
                let _ = writeln!(out, "{w}");
            }
            let _ = writeln!(out, "dim {}", witt_dim(2 * genus, k));
        }
        Command::Present { input, filled } => {
            let f = load_action(&input)?;
            let p = if filled { present_filled(&f)? } else { present_mapping_torus(&f)? };
            out.push_str(&p.to_string());
        }
        Command::Blocks { genus, k } => {
            out.push_str(&eta_block_ranks(genus, k)?.to_string());
        }
        Command::Gens { genus } => {
            for e in library(genus)? {
                let d = e.descriptor.as_ref().map(describe).unwrap_or_default();
                let _ = writeln!(out, "{} {d}", e.name);
            }
        }
        Command::Validate { input } => match load_action(&input) {
            Ok(f) => {
                let _ = writeln!(out, "{}", f.validate());
            }
            Err(Error::Validation(r)) => {
                println!("{r}");
                return Err(Error::Validation(r));
            }
            Err(e) => return Err(e),
        },
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            eprintln!("error: {}", e.code());
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
