use std::fmt;

/// Value representations understood by the codecs.
///
/// Anything else read from an explicit-VR stream is decoded as [`VR::UN`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VR {
    AE,
    AS,
    AT,
    CS,
    DA,
    DS,
    DT,
    FD,
    FL,
    IS,
    LO,
    LT,
    OB,
    OW,
    PN,
    SH,
    SL,
    SQ,
    SS,
    ST,
    TM,
    UI,
    UL,
    UN,
    US,
}

impl VR {
    pub const ALL: [VR; 25] = [
        VR::AE,
        VR::AS,
        VR::AT,
        VR::CS,
        VR::DA,
        VR::DS,
        VR::DT,
        VR::FD,
        VR::FL,
        VR::IS,
        VR::LO,
        VR::LT,
        VR::OB,
        VR::OW,
        VR::PN,
        VR::SH,
        VR::SL,
        VR::SQ,
        VR::SS,
        VR::ST,
        VR::TM,
        VR::UI,
        VR::UL,
        VR::UN,
        VR::US,
    ];

    pub fn from_bytes(code: [u8; 2]) -> Option<VR> {
        VR::ALL.iter().copied().find(|vr| vr.code() == code)
    }

    pub fn code(self) -> [u8; 2] {
        let s = self.as_str().as_bytes();
        [s[0], s[1]]
    }

    pub fn as_str(self) -> &'static str {
        match self {
            VR::AE => "AE",
            VR::AS => "AS",
            VR::AT => "AT",
            VR::CS => "CS",
            VR::DA => "DA",
            VR::DS => "DS",
            VR::DT => "DT",
            VR::FD => "FD",
            VR::FL => "FL",
            VR::IS => "IS",
            VR::LO => "LO",
            VR::LT => "LT",
            VR::OB => "OB",
            VR::OW => "OW",
            VR::PN => "PN",
            VR::SH => "SH",
            VR::SL => "SL",
            VR::SQ => "SQ",
            VR::SS => "SS",
            VR::ST => "ST",
            VR::TM => "TM",
            VR::UI => "UI",
            VR::UL => "UL",
            VR::UN => "UN",
            VR::US => "US",
        }
    }

    /// Explicit-VR header form: `true` for the 2 reserved bytes + 4-byte
    /// length layout, `false` for a 2-byte length.
    pub fn has_long_length(self) -> bool {
        matches!(self, VR::OB | VR::OW | VR::UN | VR::SQ)
    }

    /// Character-string VRs whose values may be multi-valued with `\`.
    pub fn is_string(self) -> bool {
        matches!(
            self,
            VR::AE
                | VR::AS
                | VR::CS
                | VR::DA
                | VR::DS
                | VR::DT
                | VR::IS
                | VR::LO
                | VR::LT
                | VR::PN
                | VR::SH
                | VR::ST
                | VR::TM
                | VR::UI
        )
    }

    /// Byte appended to odd-length values.
    pub fn padding(self) -> u8 {
        if self.is_string() && self != VR::UI {
            b' '
        } else {
            0
        }
    }
}

impl fmt::Display for VR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        for vr in VR::ALL {
            assert_eq!(VR::from_bytes(vr.code()), Some(vr));
        }
        assert_eq!(VR::from_bytes(*b"UT"), None);
        assert_eq!(VR::from_bytes(*b"\0\0"), None);
    }

    #[test]
    fn long_form_set() {
        let long: Vec<VR> = VR::ALL.into_iter().filter(|v| v.has_long_length()).collect();
        assert_eq!(long, vec![VR::OB, VR::OW, VR::SQ, VR::UN]);
    }

    #[test]
    fn padding_bytes() {
        assert_eq!(VR::CS.padding(), b' ');
        assert_eq!(VR::PN.padding(), b' ');
        assert_eq!(VR::UI.padding(), 0);
        assert_eq!(VR::OB.padding(), 0);
    }
}
