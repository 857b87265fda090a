use dicom_core::codec::encoded_len;
use dicom_core::dictionary;
use dicom_core::{
    encode_dataset, parse_dataset, read_part10_file, write_part10_file, DataElement, DataSet,
    FileMeta, Sequence, SequenceLength, Tag, TransferSyntax, VR,
};
use proptest::prelude::*;

fn value_bytes(vr: VR) -> BoxedStrategy<Vec<u8>> {
    match vr {
        VR::US | VR::SS | VR::OW => prop::collection::vec(any::<[u8; 2]>(), 0..8)
            .prop_map(|v| v.concat())
            .boxed(),
        VR::UL | VR::SL | VR::FL | VR::AT => prop::collection::vec(any::<[u8; 4]>(), 0..6)
            .prop_map(|v| v.concat())
            .boxed(),
        VR::FD => prop::collection::vec(any::<[u8; 8]>(), 0..4)
            .prop_map(|v| v.concat())
            .boxed(),
        VR::OB | VR::UN => prop::collection::vec(any::<u8>(), 0..48).boxed(),
        _ => "[ -\\[\\]-~]{0,40}(\\\\[ -\\[\\]-~]{0,8}){0,2}"
            .prop_map(String::into_bytes)
            .boxed(),
    }
}

fn leaf_element() -> impl Strategy<Value = DataElement> {
    let dict: Vec<(Tag, VR)> = dictionary::entries()
        .iter()
        .filter(|e| e.vr != VR::SQ)
        .map(|e| (e.tag, e.vr))
        .collect();
    prop_oneof![
        4 => prop::sample::select(dict),
        1 => (0x0009u16..0x0100, 0x1000u16..0x10FF)
            .prop_map(|(g, e)| (Tag::new(g | 1, e), VR::UN)),
    ]
    .prop_flat_map(|(tag, vr)| value_bytes(vr).prop_map(move |b| DataElement::new(tag, vr, b)))
}

fn flat_dataset() -> impl Strategy<Value = DataSet> {
    prop::collection::vec(leaf_element(), 0..10).prop_map(|v| v.into_iter().collect())
}

fn dataset() -> impl Strategy<Value = DataSet> {
    let seq_tags: Vec<Tag> = dictionary::entries()
        .iter()
        .filter(|e| e.vr == VR::SQ)
        .map(|e| e.tag)
        .collect();
    let seq = (
        prop::sample::select(seq_tags),
        prop::collection::vec(flat_dataset(), 0..3),
        any::<bool>(),
    )
        .prop_map(|(tag, items, undefined)| {
            let length = if undefined {
                SequenceLength::Undefined
            } else {
                SequenceLength::Defined
            };
            DataElement::sequence(tag, Sequence { items, length })
        });
    (flat_dataset(), prop::collection::vec(seq, 0..2)).prop_map(|(mut ds, seqs)| {
        for s in seqs {
            ds.insert(s);
        }
        ds
    })
}

fn header_tags(bytes: &[u8], syntax: TransferSyntax) -> Vec<Tag> {
    parse_dataset(bytes, syntax).unwrap().tags().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn decode_inverts_encode(ds in dataset()) {
        for syntax in TransferSyntax::ALL {
            let bytes = encode_dataset(&ds, syntax).unwrap();
            let back = parse_dataset(&bytes, syntax).unwrap();
            prop_assert_eq!(&back, &ds);
            prop_assert_eq!(encode_dataset(&back, syntax).unwrap(), bytes);
        }
    }

    #[test]
    fn encoded_tags_ascend_and_sizes_add_up(ds in dataset()) {
        for syntax in TransferSyntax::ALL {
            let bytes = encode_dataset(&ds, syntax).unwrap();
            let tags = header_tags(&bytes, syntax);
            prop_assert!(tags.windows(2).all(|w| w[0] < w[1]));
            let sum: usize = ds.iter().map(|e| encoded_len(e, syntax).unwrap()).sum();
            prop_assert_eq!(sum, bytes.len());
            prop_assert_eq!(bytes.len() % 2, 0);
            for e in &ds {
                if let Some(b) = e.bytes() {
                    prop_assert_eq!(b.len() % 2, 0);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn part10_round_trip(ds in flat_dataset(), explicit in any::<bool>()) {
        let ds: DataSet = ds.into_iter().filter(|e| e.tag.group != 0x0002).collect();
        let syntax = if explicit {
            TransferSyntax::ExplicitVrLittleEndian
        } else {
            TransferSyntax::ImplicitVrLittleEndian
        };
        let meta = FileMeta::new(syntax, "1.2.840.10008.5.1.4.1.1.7", "1.2.3.4.5");
        let bytes = write_part10_file(&meta, &ds).unwrap();
        prop_assert_eq!(read_part10_file(&bytes).unwrap(), (meta, ds));
    }
}
