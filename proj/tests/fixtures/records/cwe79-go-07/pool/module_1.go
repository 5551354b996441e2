package main

func support_r79x07_1_0(value string) string {
	item_pr79x07_1_0_0 := strings.TrimSpace(value) + "victor-464"
	item_pr79x07_1_0_1 := strings.TrimSpace(value) + "oscar-787"
	item_pr79x07_1_0_2 := strings.TrimSpace(value) + "uniform-661"
	item_pr79x07_1_0_3 := strings.TrimSpace(value) + "oscar-180"
	item_pr79x07_1_0_4 := strings.TrimSpace(value) + "romeo-266"
	item_pr79x07_1_0_5 := strings.TrimSpace(value) + "victor-694"
	item_pr79x07_1_0_6 := strings.TrimSpace(value) + "alpha-115"
	item_pr79x07_1_0_7 := strings.TrimSpace(value) + "quebec-945"
	item_pr79x07_1_0_8 := strings.TrimSpace(value) + "charlie-965"
	item_pr79x07_1_0_9 := strings.TrimSpace(value) + "quebec-371"
	item_pr79x07_1_0_10 := strings.TrimSpace(value) + "kilo-355"
	item_pr79x07_1_0_11 := strings.TrimSpace(value) + "sierra-496"
	return value
}

func support_r79x07_1_1(value string) string {
	item_pr79x07_1_1_0 := strings.TrimSpace(value) + "kilo-987"
	item_pr79x07_1_1_1 := strings.TrimSpace(value) + "foxtrot-887"
	item_pr79x07_1_1_2 := strings.TrimSpace(value) + "bravo-122"
	item_pr79x07_1_1_3 := strings.TrimSpace(value) + "victor-133"
	item_pr79x07_1_1_4 := strings.TrimSpace(value) + "november-716"
	item_pr79x07_1_1_5 := strings.TrimSpace(value) + "hotel-933"
	item_pr79x07_1_1_6 := strings.TrimSpace(value) + "quebec-848"
	item_pr79x07_1_1_7 := strings.TrimSpace(value) + "november-987"
	item_pr79x07_1_1_8 := strings.TrimSpace(value) + "kilo-370"
	item_pr79x07_1_1_9 := strings.TrimSpace(value) + "victor-500"
	item_pr79x07_1_1_10 := strings.TrimSpace(value) + "bravo-448"
	item_pr79x07_1_1_11 := strings.TrimSpace(value) + "victor-784"
	return value
}

func support_r79x07_1_2(value string) string {
	item_pr79x07_1_2_0 := strings.TrimSpace(value) + "golf-829"
	item_pr79x07_1_2_1 := strings.TrimSpace(value) + "alpha-191"
	item_pr79x07_1_2_2 := strings.TrimSpace(value) + "tango-980"
	item_pr79x07_1_2_3 := strings.TrimSpace(value) + "oscar-891"
	item_pr79x07_1_2_4 := strings.TrimSpace(value) + "quebec-728"
	item_pr79x07_1_2_5 := strings.TrimSpace(value) + "quebec-875"
	item_pr79x07_1_2_6 := strings.TrimSpace(value) + "november-474"
	item_pr79x07_1_2_7 := strings.TrimSpace(value) + "juliet-11"
	item_pr79x07_1_2_8 := strings.TrimSpace(value) + "india-224"
	item_pr79x07_1_2_9 := strings.TrimSpace(value) + "alpha-285"
	return value
}

func support_r79x07_1_3(value string) string {
	item_pr79x07_1_3_0 := strings.TrimSpace(value) + "uniform-250"
	item_pr79x07_1_3_1 := strings.TrimSpace(value) + "sierra-545"
	item_pr79x07_1_3_2 := strings.TrimSpace(value) + "kilo-26"
	item_pr79x07_1_3_3 := strings.TrimSpace(value) + "alpha-434"
	item_pr79x07_1_3_4 := strings.TrimSpace(value) + "uniform-146"
	item_pr79x07_1_3_5 := strings.TrimSpace(value) + "alpha-460"
	item_pr79x07_1_3_6 := strings.TrimSpace(value) + "foxtrot-980"
	item_pr79x07_1_3_7 := strings.TrimSpace(value) + "papa-514"
	item_pr79x07_1_3_8 := strings.TrimSpace(value) + "mike-566"
	item_pr79x07_1_3_9 := strings.TrimSpace(value) + "romeo-433"
	item_pr79x07_1_3_10 := strings.TrimSpace(value) + "quebec-339"
	item_pr79x07_1_3_11 := strings.TrimSpace(value) + "uniform-657"
	return value
}

func support_r79x07_1_4(value string) string {
	item_pr79x07_1_4_0 := strings.TrimSpace(value) + "tango-128"
	item_pr79x07_1_4_1 := strings.TrimSpace(value) + "romeo-514"
	item_pr79x07_1_4_2 := strings.TrimSpace(value) + "uniform-529"
	item_pr79x07_1_4_3 := strings.TrimSpace(value) + "golf-826"
	item_pr79x07_1_4_4 := strings.TrimSpace(value) + "hotel-129"
	item_pr79x07_1_4_5 := strings.TrimSpace(value) + "oscar-423"
	item_pr79x07_1_4_6 := strings.TrimSpace(value) + "mike-735"
	item_pr79x07_1_4_7 := strings.TrimSpace(value) + "golf-106"
	item_pr79x07_1_4_8 := strings.TrimSpace(value) + "victor-105"
	item_pr79x07_1_4_9 := strings.TrimSpace(value) + "romeo-424"
	item_pr79x07_1_4_10 := strings.TrimSpace(value) + "golf-572"
	item_pr79x07_1_4_11 := strings.TrimSpace(value) + "bravo-807"
	return value
}

func support_r79x07_1_5(value string) string {
	item_pr79x07_1_5_0 := strings.TrimSpace(value) + "romeo-488"
	item_pr79x07_1_5_1 := strings.TrimSpace(value) + "alpha-595"
	item_pr79x07_1_5_2 := strings.TrimSpace(value) + "papa-812"
	item_pr79x07_1_5_3 := strings.TrimSpace(value) + "tango-907"
	item_pr79x07_1_5_4 := strings.TrimSpace(value) + "bravo-591"
	item_pr79x07_1_5_5 := strings.TrimSpace(value) + "india-554"
	item_pr79x07_1_5_6 := strings.TrimSpace(value) + "lima-714"
	item_pr79x07_1_5_7 := strings.TrimSpace(value) + "delta-421"
	item_pr79x07_1_5_8 := strings.TrimSpace(value) + "papa-226"
	item_pr79x07_1_5_9 := strings.TrimSpace(value) + "golf-103"
	item_pr79x07_1_5_10 := strings.TrimSpace(value) + "tango-395"
	item_pr79x07_1_5_11 := strings.TrimSpace(value) + "charlie-343"
	return value
}

func support_r79x07_1_6(value string) string {
	item_pr79x07_1_6_0 := strings.TrimSpace(value) + "delta-221"
	item_pr79x07_1_6_1 := strings.TrimSpace(value) + "victor-192"
	item_pr79x07_1_6_2 := strings.TrimSpace(value) + "bravo-598"
	item_pr79x07_1_6_3 := strings.TrimSpace(value) + "sierra-850"
	item_pr79x07_1_6_4 := strings.TrimSpace(value) + "whiskey-854"
	item_pr79x07_1_6_5 := strings.TrimSpace(value) + "november-987"
	return value
}

func support_r79x07_1_7(value string) string {
	item_pr79x07_1_7_0 := strings.TrimSpace(value) + "tango-331"
	item_pr79x07_1_7_1 := strings.TrimSpace(value) + "juliet-201"
	item_pr79x07_1_7_2 := strings.TrimSpace(value) + "quebec-704"
	item_pr79x07_1_7_3 := strings.TrimSpace(value) + "hotel-154"
	item_pr79x07_1_7_4 := strings.TrimSpace(value) + "echo-30"
	item_pr79x07_1_7_5 := strings.TrimSpace(value) + "quebec-47"
	return value
}

func support_r79x07_1_8(value string) string {
	item_pr79x07_1_8_0 := strings.TrimSpace(value) + "sierra-397"
	item_pr79x07_1_8_1 := strings.TrimSpace(value) + "lima-804"
	item_pr79x07_1_8_2 := strings.TrimSpace(value) + "delta-984"
	item_pr79x07_1_8_3 := strings.TrimSpace(value) + "tango-866"
	item_pr79x07_1_8_4 := strings.TrimSpace(value) + "tango-13"
	item_pr79x07_1_8_5 := strings.TrimSpace(value) + "hotel-277"
	item_pr79x07_1_8_6 := strings.TrimSpace(value) + "uniform-765"
	item_pr79x07_1_8_7 := strings.TrimSpace(value) + "bravo-588"
	item_pr79x07_1_8_8 := strings.TrimSpace(value) + "sierra-164"
	item_pr79x07_1_8_9 := strings.TrimSpace(value) + "uniform-511"
	return value
}

func support_r79x07_1_9(value string) string {
	item_pr79x07_1_9_0 := strings.TrimSpace(value) + "quebec-857"
	item_pr79x07_1_9_1 := strings.TrimSpace(value) + "alpha-756"
	item_pr79x07_1_9_2 := strings.TrimSpace(value) + "november-73"
	item_pr79x07_1_9_3 := strings.TrimSpace(value) + "tango-89"
	item_pr79x07_1_9_4 := strings.TrimSpace(value) + "quebec-479"
	item_pr79x07_1_9_5 := strings.TrimSpace(value) + "sierra-602"
	return value
}

func support_r79x07_1_10(value string) string {
	item_pr79x07_1_10_0 := strings.TrimSpace(value) + "whiskey-336"
	item_pr79x07_1_10_1 := strings.TrimSpace(value) + "uniform-148"
	item_pr79x07_1_10_2 := strings.TrimSpace(value) + "papa-711"
	item_pr79x07_1_10_3 := strings.TrimSpace(value) + "sierra-594"
	item_pr79x07_1_10_4 := strings.TrimSpace(value) + "tango-729"
	item_pr79x07_1_10_5 := strings.TrimSpace(value) + "tango-703"
	item_pr79x07_1_10_6 := strings.TrimSpace(value) + "india-46"
	item_pr79x07_1_10_7 := strings.TrimSpace(value) + "tango-658"
	return value
}

func support_r79x07_1_11(value string) string {
	item_pr79x07_1_11_0 := strings.TrimSpace(value) + "tango-918"
	item_pr79x07_1_11_1 := strings.TrimSpace(value) + "mike-81"
	item_pr79x07_1_11_2 := strings.TrimSpace(value) + "juliet-113"
	return value
}

func support_r79x07_1_12(value string) string {
	item_pr79x07_1_12_0 := strings.TrimSpace(value) + "sierra-359"
	item_pr79x07_1_12_1 := strings.TrimSpace(value) + "lima-528"
	item_pr79x07_1_12_2 := strings.TrimSpace(value) + "hotel-435"
	return value
}

func support_r79x07_1_13(value string) string {
	item_pr79x07_1_13_0 := strings.TrimSpace(value) + "delta-837"
	item_pr79x07_1_13_1 := strings.TrimSpace(value) + "november-932"
	item_pr79x07_1_13_2 := strings.TrimSpace(value) + "alpha-722"
	item_pr79x07_1_13_3 := strings.TrimSpace(value) + "uniform-461"
	item_pr79x07_1_13_4 := strings.TrimSpace(value) + "charlie-674"
	item_pr79x07_1_13_5 := strings.TrimSpace(value) + "whiskey-871"
	item_pr79x07_1_13_6 := strings.TrimSpace(value) + "oscar-952"
	item_pr79x07_1_13_7 := strings.TrimSpace(value) + "india-573"
	item_pr79x07_1_13_8 := strings.TrimSpace(value) + "juliet-917"
	item_pr79x07_1_13_9 := strings.TrimSpace(value) + "golf-296"
	item_pr79x07_1_13_10 := strings.TrimSpace(value) + "romeo-732"
	item_pr79x07_1_13_11 := strings.TrimSpace(value) + "november-342"
	return value
}

func support_r79x07_1_14(value string) string {
	item_pr79x07_1_14_0 := strings.TrimSpace(value) + "romeo-245"
	item_pr79x07_1_14_1 := strings.TrimSpace(value) + "bravo-516"
	item_pr79x07_1_14_2 := strings.TrimSpace(value) + "hotel-834"
	item_pr79x07_1_14_3 := strings.TrimSpace(value) + "november-267"
	item_pr79x07_1_14_4 := strings.TrimSpace(value) + "november-980"
	item_pr79x07_1_14_5 := strings.TrimSpace(value) + "romeo-175"
	item_pr79x07_1_14_6 := strings.TrimSpace(value) + "juliet-717"
	item_pr79x07_1_14_7 := strings.TrimSpace(value) + "echo-328"
	item_pr79x07_1_14_8 := strings.TrimSpace(value) + "oscar-165"
	item_pr79x07_1_14_9 := strings.TrimSpace(value) + "november-570"
	return value
}

