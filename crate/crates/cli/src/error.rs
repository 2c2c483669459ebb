use thiserror::Error;

use crate::scenario::Located;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid scenario:\n{}", format_problems(.0))]
    Invalid(Vec<Located>),
    #[error("{0}")]
    Input(String),
    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: braidhom::Error,
    },
}

fn format_problems(problems: &[Located]) -> String {
    problems.iter().map(|p| format!("  {p}")).collect::<Vec<_>>().join("\n")
}

impl CliError {
    pub fn core(context: impl Into<String>) -> impl FnOnce(braidhom::Error) -> CliError {
        let context = context.into();
        move |source| CliError::Core { context, source }
    }

    pub fn exit_code(&self) -> u8 {
        use braidhom::Error as E;
        match self {
            CliError::Core { source: E::ResourceCap { .. }, .. } => EXIT_RESOURCE,
            CliError::Core {
                source: E::YbeNotVerified | E::CharacterNotVerified(_) | E::NonZeroSquare { .. } | E::UnstableSpan { .. },
                ..
            } => EXIT_CHECK_FAILED,
            _ => EXIT_INPUT,
        }
    }
}
