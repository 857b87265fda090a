"""Regenerate src/dictionary/entries.rs from pydicom's copy of the PS3.6 registry.

    python3 tools/gen_dictionary.py > src/dictionary/entries.rs
"""
from pydicom._dicom_dict import DicomDictionary

SUPPORTED = {
    "AE", "AS", "CS", "DA", "DS", "DT", "IS", "LO", "LT", "PN", "SH", "ST", "TM", "UI",
    "UL", "US", "SS", "SL", "AT", "FL", "FD", "OB", "OW", "UN", "SQ",
}
WHOLE_GROUPS = {0x0000, 0x0002, 0x0008, 0x0010, 0x0020, 0x0028, 0x0032, 0x7FE0}
EXTRA_KEYWORDS = {
    # acquisition (0018)
    "ContrastBolusAgent", "BodyPartExamined", "ScanningSequence", "SequenceVariant",
    "ScanOptions", "MRAcquisitionType", "SequenceName", "SliceThickness", "KVP",
    "RepetitionTime", "EchoTime", "InversionTime", "NumberOfAverages", "ImagingFrequency",
    "MagneticFieldStrength", "SpacingBetweenSlices", "EchoTrainLength", "DeviceSerialNumber",
    "SoftwareVersions", "ProtocolName", "DataCollectionDiameter", "ReconstructionDiameter",
    "DistanceSourceToDetector", "DistanceSourceToPatient", "GantryDetectorTilt",
    "TableHeight", "RotationDirection", "ExposureTime", "XRayTubeCurrent", "Exposure",
    "FilterType", "GeneratorPower", "FocalSpots", "ConvolutionKernel", "PatientPosition",
    "ViewPosition", "FlipAngle", "ReceiveCoilName", "TransmitCoilName", "AcquisitionMatrix",
    "PixelBandwidth", "ImagerPixelSpacing", "ContrastBolusVolume",
    # scheduling / procedure (0040)
    "ScheduledProcedureStepSequence", "ScheduledStationAETitle",
    "ScheduledProcedureStepStartDate", "ScheduledProcedureStepStartTime",
    "ScheduledPerformingPhysicianName", "ScheduledProcedureStepDescription",
    "ScheduledProcedureStepID", "PerformedProcedureStepStartDate",
    "PerformedProcedureStepStartTime", "PerformedProcedureStepID",
    "PerformedProcedureStepDescription", "RequestedProcedureID", "ReasonForTheRequestedProcedure",
    "RequestAttributesSequence", "ReferencedSOPSequence",
}


def main():
    rows = []
    for tag, (vr, vm, name, retired, keyword) in sorted(DicomDictionary.items()):
        if retired or not keyword:
            continue
        vr = vr.split(" or ")[0]
        if vr not in SUPPORTED:
            continue
        group = tag >> 16
        if group not in WHOLE_GROUPS and keyword not in EXTRA_KEYWORDS:
            continue
        rows.append((group, tag & 0xFFFF, vr, keyword, vm))
    print("// Generated by tools/gen_dictionary.py. Do not edit by hand.")
    print()
    print("use super::DictEntry;")
    print("use crate::tag::Tag;")
    print("use crate::vr::VR;")
    print()
    print(f"pub(super) static ENTRIES: [DictEntry; {len(rows)}] = [")
    for group, element, vr, keyword, vm in rows:
        print(
            f"    DictEntry::new(Tag::new(0x{group:04X}, 0x{element:04X}), VR::{vr}, "
            f"\"{keyword}\", \"{vm}\"),"
        )
    print("];")


if __name__ == "__main__":
    main()
