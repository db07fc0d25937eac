"""Regenerate src/netscore/data/networks_ilsvrc2012.json from the table below.

Run from the repository root:  python tools/build_seed.py
"""

from pathlib import Path

from netscore.metrics import NetworkMetrics
from netscore.registry import NetworkRecord, Registry, serialize_registry

M = "macs"
F = "multiply_adds_reported_as_flops"
U = "unknown"

# name, family, year, top-1 %, params, MACs, source, MAC convention
ROWS = [
    ("AlexNet", "AlexNet", 2012, 57.1, 60_965_224, 724_406_816,
     "Krizhevsky et al., NIPS 2012; counts from bundled arch/alexnet.json", M),
    ("AmoebaNet-A (4, 50)", "AmoebaNet", 2018, 74.5, 5_100_000, 555_000_000,
     "Real et al., Regularized Evolution for Image Classifier Architecture Search, 2018", M),
    ("AmoebaNet-A (6, 190)", "AmoebaNet", 2018, 82.8, 86_700_000, 23_100_000_000,
     "Real et al., Regularized Evolution for Image Classifier Architecture Search, 2018", M),
    ("AmoebaNet-A (6, 204)", "AmoebaNet", 2018, 82.8, 99_600_000, 26_200_000_000,
     "Real et al., Regularized Evolution for Image Classifier Architecture Search, 2018", M),
    ("AmoebaNet-B (3, 62)", "AmoebaNet", 2018, 74.0, 5_300_000, 555_000_000,
     "Real et al., Regularized Evolution for Image Classifier Architecture Search, 2018", M),
    ("AmoebaNet-B (6, 190)", "AmoebaNet", 2018, 82.3, 84_000_000, 22_300_000_000,
     "Real et al., Regularized Evolution for Image Classifier Architecture Search, 2018", M),
    ("AmoebaNet-C (4, 50)", "AmoebaNet", 2018, 75.7, 6_400_000, 570_000_000,
     "Real et al., Regularized Evolution for Image Classifier Architecture Search, 2018", M),
    ("AmoebaNet-C (6, 228)", "AmoebaNet", 2018, 83.1, 155_300_000, 41_100_000_000,
     "Real et al., Regularized Evolution for Image Classifier Architecture Search, 2018", M),
    ("CondenseNet (G=C=4)", "CondenseNet", 2018, 73.8, 4_800_000, 529_000_000,
     "Huang et al., CondenseNet, CVPR 2018", F),
    ("CondenseNet (G=C=8)", "CondenseNet", 2018, 71.0, 2_900_000, 274_000_000,
     "Huang et al., CondenseNet, CVPR 2018", F),
    ("DenseNet-121 (k=32)", "DenseNet", 2017, 74.98, 7_978_856, 2_870_000_000,
     "Huang et al., Densely Connected Convolutional Networks, CVPR 2017", F),
    ("DenseNet-169 (k=32)", "DenseNet", 2017, 76.2, 14_149_480, 3_400_000_000,
     "Huang et al., Densely Connected Convolutional Networks, CVPR 2017", F),
    ("DenseNet-161 (k=48)", "DenseNet", 2017, 77.65, 28_681_000, 7_820_000_000,
     "Huang et al., Densely Connected Convolutional Networks, CVPR 2017", F),
    ("DenseNet-201 (k=32)", "DenseNet", 2017, 77.42, 20_013_928, 4_340_000_000,
     "Huang et al., Densely Connected Convolutional Networks, CVPR 2017", F),
    ("DPN-131", "DPN", 2017, 80.07, 79_500_000, 16_000_000_000,
     "Chen et al., Dual Path Networks, NIPS 2017", F),
    ("GoogleNet", "GoogLeNet", 2015, 68.7, 7_000_000, 1_500_000_000,
     "Szegedy et al., Going Deeper with Convolutions, CVPR 2015", M),
    ("IGC-L4M32", "IGC", 2017, 70.5, 11_300_000, 1_900_000_000,
     "Zhang et al., Interleaved Group Convolutions, ICCV 2017 (approximate)", U),
    ("IGC-L16M16", "IGC", 2017, 70.0, 11_200_000, 2_200_000_000,
     "Zhang et al., Interleaved Group Convolutions, ICCV 2017 (approximate)", U),
    ("IGC-L100M2", "IGC", 2017, 68.5, 8_900_000, 1_300_000_000,
     "Zhang et al., Interleaved Group Convolutions, ICCV 2017 (approximate)", U),
    ("Inception-ResNetv2", "Inception", 2017, 80.1, 55_800_000, 13_200_000_000,
     "Szegedy et al., Inception-v4, Inception-ResNet, AAAI 2017", U),
    ("Inceptionv2", "Inception", 2015, 74.8, 11_200_000, 2_000_000_000,
     "Ioffe and Szegedy, Batch Normalization, ICML 2015", U),
    ("Inceptionv3", "Inception", 2016, 78.8, 23_800_000, 5_720_000_000,
     "Szegedy et al., Rethinking the Inception Architecture, CVPR 2016", U),
    ("Inceptionv4", "Inception", 2017, 80.0, 42_700_000, 12_300_000_000,
     "Szegedy et al., Inception-v4, Inception-ResNet, AAAI 2017", U),
    ("MobileNetv1 (1.0-224)", "MobileNetv1", 2017, 70.6, 4_240_000, 569_000_000,
     "Howard et al., MobileNets, 2017", M),
    ("MobileNetv1 (1.0-192)", "MobileNetv1", 2017, 69.1, 4_240_000, 418_000_000,
     "Howard et al., MobileNets, 2017", M),
    ("MobileNetv1 (1.0-160)", "MobileNetv1", 2017, 67.2, 4_240_000, 290_000_000,
     "Howard et al., MobileNets, 2017", M),
    ("MobileNetv1 (1.0-128)", "MobileNetv1", 2017, 64.4, 4_240_000, 186_000_000,
     "Howard et al., MobileNets, 2017", M),
    ("MobileNetv1 (0.75-224)", "MobileNetv1", 2017, 68.4, 2_600_000, 325_000_000,
     "Howard et al., MobileNets, 2017", M),
    ("MobileNetv2", "MobileNetv2", 2018, 72.0, 3_400_000, 300_000_000,
     "Sandler et al., MobileNetV2, CVPR 2018", M),
    ("MobileNetv2 (1.4)", "MobileNetv2", 2018, 74.7, 6_900_000, 585_000_000,
     "Sandler et al., MobileNetV2, CVPR 2018", M),
    ("NASNet-A (4 @ 1056)", "NASNet", 2018, 74.0, 5_300_000, 564_000_000,
     "Zoph et al., Learning Transferable Architectures, CVPR 2018", M),
    ("NASNet-A (6 @ 4132)", "NASNet", 2018, 82.7, 88_900_000, 23_800_000_000,
     "Zoph et al., Learning Transferable Architectures, CVPR 2018 (listed there as 6 @ 4032)", M),
    ("NASNet-B (4 @ 1536)", "NASNet", 2018, 72.8, 5_300_000, 488_000_000,
     "Zoph et al., Learning Transferable Architectures, CVPR 2018", M),
    ("NiN", "NiN", 2014, 59.36, 7_600_000, 1_100_000_000,
     "Lin et al., Network in Network, ICLR 2014 (Caffe model zoo)", U),
    ("OverFeat", "OverFeat", 2014, 64.4, 145_000_000, 2_810_000_000,
     "Sermanet et al., OverFeat, ICLR 2014 (fast model)", U),
    ("PNASNet-5 (4, 216)", "PNASNet", 2018, 82.9, 86_100_000, 25_000_000_000,
     "Liu et al., Progressive Neural Architecture Search, ECCV 2018", M),
    ("PolyNet", "PolyNet", 2017, 81.3, 92_000_000, 34_700_000_000,
     "Zhang et al., PolyNet, CVPR 2017", U),
    ("PreResNet-152", "PreResNet", 2016, 77.8, 60_200_000, 11_300_000_000,
     "He et al., Identity Mappings in Deep Residual Networks, ECCV 2016", F),
    ("PreResNet-200", "PreResNet", 2016, 78.2, 64_700_000, 15_000_000_000,
     "He et al., Identity Mappings in Deep Residual Networks, ECCV 2016", F),
    ("PyramidNet-101 (alpha=250)", "PyramidNet", 2017, 78.6, 42_500_000, 8_680_000_000,
     "Han et al., Deep Pyramidal Residual Networks, CVPR 2017 (approximate)", U),
    ("PyramidNet-200 (alpha=300)", "PyramidNet", 2017, 79.9, 62_100_000, 10_500_000_000,
     "Han et al., Deep Pyramidal Residual Networks, CVPR 2017 (approximate)", U),
    ("PyramidNet-200 (alpha=450)", "PyramidNet", 2017, 80.8, 116_400_000, 20_100_000_000,
     "Han et al., Deep Pyramidal Residual Networks, CVPR 2017 (approximate)", U),
    ("ResNet-152", "ResNet", 2016, 77.0, 60_200_000, 11_300_000_000,
     "He et al., Deep Residual Learning, CVPR 2016", F),
    ("ResNet-50", "ResNet", 2016, 75.3, 25_600_000, 3_800_000_000,
     "He et al., Deep Residual Learning, CVPR 2016", F),
    ("ResNet-101", "ResNet", 2016, 76.4, 44_500_000, 7_600_000_000,
     "He et al., Deep Residual Learning, CVPR 2016", F),
    ("ResNeXt-101", "ResNeXt", 2017, 79.6, 83_600_000, 15_500_000_000,
     "Xie et al., Aggregated Residual Transformations, CVPR 2017 (64x4d)", F),
    ("ResNeXt-101 (32x4d)", "ResNeXt", 2017, 78.8, 44_200_000, 8_000_000_000,
     "Xie et al., Aggregated Residual Transformations, CVPR 2017", F),
    ("SENet", "SENet", 2018, 81.3, 115_100_000, 20_700_000_000,
     "Hu et al., Squeeze-and-Excitation Networks, CVPR 2018 (SENet-154)", F),
    ("ShuffleNet (1.5)", "ShuffleNet", 2018, 71.5, 3_400_000, 292_000_000,
     "Zhang et al., ShuffleNet, CVPR 2018 (g=3)", F),
    ("ShuffleNet (x2)", "ShuffleNet", 2018, 73.7, 5_400_000, 524_000_000,
     "Zhang et al., ShuffleNet, CVPR 2018 (g=3)", F),
    ("SimpleNet", "SimpleNet", 2016, 60.97, 5_400_000, 1_900_000_000,
     "Hasanpour et al., Lets keep it simple, 2016 (approximate)", U),
    ("SqueezeNet", "SqueezeNet", 2016, 57.5, 1_250_000, 860_000_000,
     "Iandola et al., SqueezeNet, 2016 (v1.0)", U),
    ("SqueezeNetv1.1", "SqueezeNet", 2016, 57.5, 1_240_000, 360_000_000,
     "Iandola et al., SqueezeNet v1.1 release notes: same accuracy, 2.4x less computation than v1.0", U),
    ("SqueezeNext (1.0-23v5)", "SqueezeNext", 2018, 59.24, 940_000, 228_000_000,
     "Gholami et al., SqueezeNext, CVPR Workshops 2018", M),
    ("SqueezeNext (2.0-23)", "SqueezeNext", 2018, 67.18, 2_590_000, 708_000_000,
     "Gholami et al., SqueezeNext, CVPR Workshops 2018", M),
    ("SqueezeNext (2.0-23v5)", "SqueezeNext", 2018, 67.44, 3_230_000, 552_000_000,
     "Gholami et al., SqueezeNext, CVPR Workshops 2018", M),
    ("TinyDarkNet", "TinyDarkNet", 2016, 58.7, 1_000_000, 980_000_000,
     "Redmon, Darknet ImageNet reference models (reported as operations)", U),
    ("VGG16", "VGG", 2015, 68.5, 138_357_544, 15_470_264_320,
     "Simonyan and Zisserman, ICLR 2015; single centre-crop accuracy; counts from bundled arch/vgg16.json", M),
    ("Xception", "Xception", 2017, 79.0, 22_800_000, 8_400_000_000,
     "Chollet, Xception, CVPR 2017", U),
    ("ZynqNet", "ZynqNet", 2016, 63.0, 2_500_000, 530_000_000,
     "Gschwend, ZynqNet, 2016", M),
]

NOTES = [
    "Top-1 accuracy is single-model ILSVRC 2012 validation accuracy in percent; MAC counts are per 224x224-class inference as reported by each source.",
    "The 60-network comparison list this set mirrors names IGC-L100M2 twice; the second entry is taken to be the third ImageNet variant of the same work, IGC-L4M32.",
    "That list also names only 59 entries against a stated total of 60; ResNeXt-101 is carried in both published widths (64x4d as 'ResNeXt-101', plus 'ResNeXt-101 (32x4d)') to reach 60 unique records.",
    "VGG16 uses a single centre-crop top-1 (68.5%) rather than the dense multi-scale evaluation of its source, which reports higher figures.",
    "SqueezeNetv1.1 has no separately published accuracy; its release notes state parity with v1.0, so v1.0's figure is reused.",
    "Entries marked (approximate) could not be cross-checked against the source table and should be verified before citing.",
    "mac_convention records whether a source counts multiply-accumulates ('macs'), labels multiply-adds as FLOPs, or is unclear ('unknown'); no rescaling is applied.",
]


def build() -> Registry:
    records = [
        NetworkRecord(name, family, year, NetworkMetrics(acc, params, macs), source, conv)
        for name, family, year, acc, params, macs, source, conv in ROWS
    ]
    return Registry(records, notes=NOTES)


if __name__ == "__main__":
    out = Path(__file__).resolve().parents[1] / "src" / "netscore" / "data" / "networks_ilsvrc2012.json"
    out.write_text(serialize_registry(build()), encoding="utf-8")
    print(f"wrote {len(ROWS)} records to {out}")
