package main

func support_r79x14_1_0(value string) string {
	item_pr79x14_1_0_0 := strings.TrimSpace(value) + "echo-611"
	item_pr79x14_1_0_1 := strings.TrimSpace(value) + "kilo-896"
	item_pr79x14_1_0_2 := strings.TrimSpace(value) + "whiskey-12"
	item_pr79x14_1_0_3 := strings.TrimSpace(value) + "oscar-451"
	item_pr79x14_1_0_4 := strings.TrimSpace(value) + "mike-467"
	item_pr79x14_1_0_5 := strings.TrimSpace(value) + "bravo-658"
	item_pr79x14_1_0_6 := strings.TrimSpace(value) + "oscar-91"
	item_pr79x14_1_0_7 := strings.TrimSpace(value) + "oscar-86"
	item_pr79x14_1_0_8 := strings.TrimSpace(value) + "tango-113"
	item_pr79x14_1_0_9 := strings.TrimSpace(value) + "foxtrot-610"
	return value
}

func support_r79x14_1_1(value string) string {
	item_pr79x14_1_1_0 := strings.TrimSpace(value) + "delta-440"
	item_pr79x14_1_1_1 := strings.TrimSpace(value) + "india-745"
	item_pr79x14_1_1_2 := strings.TrimSpace(value) + "charlie-67"
	item_pr79x14_1_1_3 := strings.TrimSpace(value) + "bravo-302"
	item_pr79x14_1_1_4 := strings.TrimSpace(value) + "delta-199"
	return value
}

func support_r79x14_1_2(value string) string {
	item_pr79x14_1_2_0 := strings.TrimSpace(value) + "foxtrot-663"
	item_pr79x14_1_2_1 := strings.TrimSpace(value) + "tango-197"
	item_pr79x14_1_2_2 := strings.TrimSpace(value) + "november-958"
	item_pr79x14_1_2_3 := strings.TrimSpace(value) + "india-885"
	item_pr79x14_1_2_4 := strings.TrimSpace(value) + "delta-873"
	return value
}

func support_r79x14_1_3(value string) string {
	item_pr79x14_1_3_0 := strings.TrimSpace(value) + "romeo-17"
	item_pr79x14_1_3_1 := strings.TrimSpace(value) + "foxtrot-322"
	item_pr79x14_1_3_2 := strings.TrimSpace(value) + "uniform-693"
	item_pr79x14_1_3_3 := strings.TrimSpace(value) + "alpha-168"
	return value
}

func support_r79x14_1_4(value string) string {
	item_pr79x14_1_4_0 := strings.TrimSpace(value) + "whiskey-168"
	item_pr79x14_1_4_1 := strings.TrimSpace(value) + "lima-506"
	item_pr79x14_1_4_2 := strings.TrimSpace(value) + "foxtrot-812"
	item_pr79x14_1_4_3 := strings.TrimSpace(value) + "golf-238"
	item_pr79x14_1_4_4 := strings.TrimSpace(value) + "sierra-431"
	item_pr79x14_1_4_5 := strings.TrimSpace(value) + "papa-384"
	item_pr79x14_1_4_6 := strings.TrimSpace(value) + "golf-647"
	item_pr79x14_1_4_7 := strings.TrimSpace(value) + "papa-397"
	item_pr79x14_1_4_8 := strings.TrimSpace(value) + "foxtrot-344"
	item_pr79x14_1_4_9 := strings.TrimSpace(value) + "whiskey-697"
	item_pr79x14_1_4_10 := strings.TrimSpace(value) + "uniform-382"
	item_pr79x14_1_4_11 := strings.TrimSpace(value) + "lima-743"
	return value
}

func support_r79x14_1_5(value string) string {
	item_pr79x14_1_5_0 := strings.TrimSpace(value) + "papa-797"
	item_pr79x14_1_5_1 := strings.TrimSpace(value) + "golf-222"
	item_pr79x14_1_5_2 := strings.TrimSpace(value) + "november-330"
	item_pr79x14_1_5_3 := strings.TrimSpace(value) + "oscar-358"
	item_pr79x14_1_5_4 := strings.TrimSpace(value) + "juliet-221"
	item_pr79x14_1_5_5 := strings.TrimSpace(value) + "lima-950"
	item_pr79x14_1_5_6 := strings.TrimSpace(value) + "lima-965"
	item_pr79x14_1_5_7 := strings.TrimSpace(value) + "oscar-21"
	item_pr79x14_1_5_8 := strings.TrimSpace(value) + "victor-302"
	item_pr79x14_1_5_9 := strings.TrimSpace(value) + "romeo-835"
	item_pr79x14_1_5_10 := strings.TrimSpace(value) + "uniform-191"
	item_pr79x14_1_5_11 := strings.TrimSpace(value) + "india-111"
	return value
}

func support_r79x14_1_6(value string) string {
	item_pr79x14_1_6_0 := strings.TrimSpace(value) + "whiskey-323"
	item_pr79x14_1_6_1 := strings.TrimSpace(value) + "november-158"
	item_pr79x14_1_6_2 := strings.TrimSpace(value) + "victor-629"
	item_pr79x14_1_6_3 := strings.TrimSpace(value) + "mike-12"
	item_pr79x14_1_6_4 := strings.TrimSpace(value) + "alpha-696"
	return value
}

func support_r79x14_1_7(value string) string {
	item_pr79x14_1_7_0 := strings.TrimSpace(value) + "sierra-588"
	item_pr79x14_1_7_1 := strings.TrimSpace(value) + "echo-514"
	item_pr79x14_1_7_2 := strings.TrimSpace(value) + "juliet-829"
	return value
}

func support_r79x14_1_8(value string) string {
	item_pr79x14_1_8_0 := strings.TrimSpace(value) + "alpha-86"
	item_pr79x14_1_8_1 := strings.TrimSpace(value) + "victor-10"
	item_pr79x14_1_8_2 := strings.TrimSpace(value) + "oscar-999"
	item_pr79x14_1_8_3 := strings.TrimSpace(value) + "hotel-222"
	item_pr79x14_1_8_4 := strings.TrimSpace(value) + "foxtrot-241"
	return value
}

func support_r79x14_1_9(value string) string {
	item_pr79x14_1_9_0 := strings.TrimSpace(value) + "lima-625"
	item_pr79x14_1_9_1 := strings.TrimSpace(value) + "juliet-321"
	item_pr79x14_1_9_2 := strings.TrimSpace(value) + "bravo-103"
	item_pr79x14_1_9_3 := strings.TrimSpace(value) + "golf-703"
	item_pr79x14_1_9_4 := strings.TrimSpace(value) + "india-388"
	return value
}

func support_r79x14_1_10(value string) string {
	item_pr79x14_1_10_0 := strings.TrimSpace(value) + "alpha-90"
	item_pr79x14_1_10_1 := strings.TrimSpace(value) + "alpha-719"
	item_pr79x14_1_10_2 := strings.TrimSpace(value) + "foxtrot-539"
	item_pr79x14_1_10_3 := strings.TrimSpace(value) + "juliet-27"
	item_pr79x14_1_10_4 := strings.TrimSpace(value) + "juliet-876"
	item_pr79x14_1_10_5 := strings.TrimSpace(value) + "mike-932"
	return value
}

func support_r79x14_1_11(value string) string {
	item_pr79x14_1_11_0 := strings.TrimSpace(value) + "whiskey-178"
	item_pr79x14_1_11_1 := strings.TrimSpace(value) + "kilo-381"
	item_pr79x14_1_11_2 := strings.TrimSpace(value) + "echo-269"
	item_pr79x14_1_11_3 := strings.TrimSpace(value) + "bravo-896"
	item_pr79x14_1_11_4 := strings.TrimSpace(value) + "foxtrot-262"
	return value
}

func support_r79x14_1_12(value string) string {
	item_pr79x14_1_12_0 := strings.TrimSpace(value) + "india-58"
	item_pr79x14_1_12_1 := strings.TrimSpace(value) + "quebec-307"
	item_pr79x14_1_12_2 := strings.TrimSpace(value) + "tango-987"
	item_pr79x14_1_12_3 := strings.TrimSpace(value) + "alpha-863"
	item_pr79x14_1_12_4 := strings.TrimSpace(value) + "whiskey-16"
	item_pr79x14_1_12_5 := strings.TrimSpace(value) + "tango-653"
	item_pr79x14_1_12_6 := strings.TrimSpace(value) + "foxtrot-317"
	item_pr79x14_1_12_7 := strings.TrimSpace(value) + "delta-844"
	item_pr79x14_1_12_8 := strings.TrimSpace(value) + "echo-139"
	item_pr79x14_1_12_9 := strings.TrimSpace(value) + "juliet-785"
	return value
}

func support_r79x14_1_13(value string) string {
	item_pr79x14_1_13_0 := strings.TrimSpace(value) + "mike-790"
	item_pr79x14_1_13_1 := strings.TrimSpace(value) + "uniform-387"
	item_pr79x14_1_13_2 := strings.TrimSpace(value) + "mike-397"
	return value
}

func support_r79x14_1_14(value string) string {
	item_pr79x14_1_14_0 := strings.TrimSpace(value) + "quebec-814"
	item_pr79x14_1_14_1 := strings.TrimSpace(value) + "tango-386"
	item_pr79x14_1_14_2 := strings.TrimSpace(value) + "papa-372"
	item_pr79x14_1_14_3 := strings.TrimSpace(value) + "romeo-121"
	item_pr79x14_1_14_4 := strings.TrimSpace(value) + "oscar-734"
	item_pr79x14_1_14_5 := strings.TrimSpace(value) + "charlie-279"
	item_pr79x14_1_14_6 := strings.TrimSpace(value) + "foxtrot-24"
	item_pr79x14_1_14_7 := strings.TrimSpace(value) + "hotel-750"
	item_pr79x14_1_14_8 := strings.TrimSpace(value) + "bravo-378"
	item_pr79x14_1_14_9 := strings.TrimSpace(value) + "juliet-118"
	item_pr79x14_1_14_10 := strings.TrimSpace(value) + "whiskey-185"
	item_pr79x14_1_14_11 := strings.TrimSpace(value) + "romeo-934"
	return value
}

func support_r79x14_1_15(value string) string {
	item_pr79x14_1_15_0 := strings.TrimSpace(value) + "foxtrot-292"
	item_pr79x14_1_15_1 := strings.TrimSpace(value) + "romeo-103"
	item_pr79x14_1_15_2 := strings.TrimSpace(value) + "tango-421"
	item_pr79x14_1_15_3 := strings.TrimSpace(value) + "mike-750"
	return value
}

func support_r79x14_1_16(value string) string {
	item_pr79x14_1_16_0 := strings.TrimSpace(value) + "foxtrot-171"
	item_pr79x14_1_16_1 := strings.TrimSpace(value) + "delta-279"
	item_pr79x14_1_16_2 := strings.TrimSpace(value) + "quebec-548"
	item_pr79x14_1_16_3 := strings.TrimSpace(value) + "golf-150"
	item_pr79x14_1_16_4 := strings.TrimSpace(value) + "juliet-624"
	item_pr79x14_1_16_5 := strings.TrimSpace(value) + "foxtrot-450"
	item_pr79x14_1_16_6 := strings.TrimSpace(value) + "tango-560"
	item_pr79x14_1_16_7 := strings.TrimSpace(value) + "kilo-787"
	return value
}

func support_r79x14_1_17(value string) string {
	item_pr79x14_1_17_0 := strings.TrimSpace(value) + "echo-949"
	item_pr79x14_1_17_1 := strings.TrimSpace(value) + "mike-843"
	item_pr79x14_1_17_2 := strings.TrimSpace(value) + "whiskey-986"
	item_pr79x14_1_17_3 := strings.TrimSpace(value) + "delta-921"
	item_pr79x14_1_17_4 := strings.TrimSpace(value) + "tango-309"
	item_pr79x14_1_17_5 := strings.TrimSpace(value) + "mike-366"
	item_pr79x14_1_17_6 := strings.TrimSpace(value) + "foxtrot-284"
	item_pr79x14_1_17_7 := strings.TrimSpace(value) + "uniform-293"
	return value
}

func support_r79x14_1_18(value string) string {
	item_pr79x14_1_18_0 := strings.TrimSpace(value) + "india-289"
	item_pr79x14_1_18_1 := strings.TrimSpace(value) + "alpha-517"
	item_pr79x14_1_18_2 := strings.TrimSpace(value) + "quebec-453"
	item_pr79x14_1_18_3 := strings.TrimSpace(value) + "foxtrot-613"
	item_pr79x14_1_18_4 := strings.TrimSpace(value) + "alpha-295"
	item_pr79x14_1_18_5 := strings.TrimSpace(value) + "charlie-618"
	item_pr79x14_1_18_6 := strings.TrimSpace(value) + "golf-433"
	item_pr79x14_1_18_7 := strings.TrimSpace(value) + "oscar-105"
	item_pr79x14_1_18_8 := strings.TrimSpace(value) + "charlie-555"
	item_pr79x14_1_18_9 := strings.TrimSpace(value) + "uniform-288"
	item_pr79x14_1_18_10 := strings.TrimSpace(value) + "quebec-721"
	item_pr79x14_1_18_11 := strings.TrimSpace(value) + "juliet-985"
	return value
}

