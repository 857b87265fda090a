use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatusClass {
    Success,
    Pending,
    Cancel,
    Failure,
}

/// A DIMSE response status code, `(0000,0900)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Status(pub u16);

impl Status {
    pub const SUCCESS: Status = Status(0x0000);
    pub const PENDING: Status = Status(0xFF00);
    pub const PENDING_WARNING: Status = Status(0xFF01);
    pub const CANCEL: Status = Status(0xFE00);
    pub const SUB_OPERATIONS_FAILED: Status = Status(0xB000);
    pub const OUT_OF_RESOURCES: Status = Status(0xA700);
    pub const UNABLE_TO_PERFORM_SUB_OPERATIONS: Status = Status(0xA702);
    pub const MOVE_DESTINATION_UNKNOWN: Status = Status(0xA801);
    pub const DATA_SET_MISMATCH: Status = Status(0xA900);
    pub const CANNOT_UNDERSTAND: Status = Status(0xC000);
    pub const UNABLE_TO_PROCESS: Status = Status(0xC001);
    pub const UNRECOGNIZED_OPERATION: Status = Status(0x0211);

    pub fn code(self) -> u16 {
        self.0
    }

    pub fn class(self) -> StatusClass {
        match self.0 {
            0x0000 => StatusClass::Success,
            0xFF00 | 0xFF01 => StatusClass::Pending,
            0xFE00 => StatusClass::Cancel,
            _ => StatusClass::Failure,
        }
    }

    pub fn is_success(self) -> bool {
        self.class() == StatusClass::Success
    }

    pub fn is_pending(self) -> bool {
        self.class() == StatusClass::Pending
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0x{:04X}", self.0)
    }
}
