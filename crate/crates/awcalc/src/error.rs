use thiserror::Error;

#[derive(Debug, Error)]
pub enum AwError {
    #[error("label {0:?} already in use")]
    LabelClash(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("strand {0:?} carries arrow heads where none are allowed")]
    NonEmptyHeads(String),
}
