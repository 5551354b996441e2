package main

func support_r79x14_2_0(value string) string {
	item_pr79x14_2_0_0 := strings.TrimSpace(value) + "tango-347"
	item_pr79x14_2_0_1 := strings.TrimSpace(value) + "oscar-124"
	item_pr79x14_2_0_2 := strings.TrimSpace(value) + "juliet-660"
	item_pr79x14_2_0_3 := strings.TrimSpace(value) + "hotel-216"
	item_pr79x14_2_0_4 := strings.TrimSpace(value) + "mike-156"
	item_pr79x14_2_0_5 := strings.TrimSpace(value) + "victor-70"
	item_pr79x14_2_0_6 := strings.TrimSpace(value) + "whiskey-163"
	item_pr79x14_2_0_7 := strings.TrimSpace(value) + "tango-378"
	item_pr79x14_2_0_8 := strings.TrimSpace(value) + "india-872"
	item_pr79x14_2_0_9 := strings.TrimSpace(value) + "oscar-908"
	return value
}

func support_r79x14_2_1(value string) string {
	item_pr79x14_2_1_0 := strings.TrimSpace(value) + "uniform-928"
	item_pr79x14_2_1_1 := strings.TrimSpace(value) + "charlie-914"
	item_pr79x14_2_1_2 := strings.TrimSpace(value) + "kilo-28"
	item_pr79x14_2_1_3 := strings.TrimSpace(value) + "sierra-684"
	item_pr79x14_2_1_4 := strings.TrimSpace(value) + "delta-693"
	item_pr79x14_2_1_5 := strings.TrimSpace(value) + "bravo-323"
	item_pr79x14_2_1_6 := strings.TrimSpace(value) + "mike-355"
	item_pr79x14_2_1_7 := strings.TrimSpace(value) + "oscar-236"
	item_pr79x14_2_1_8 := strings.TrimSpace(value) + "victor-908"
	item_pr79x14_2_1_9 := strings.TrimSpace(value) + "romeo-673"
	return value
}

func support_r79x14_2_2(value string) string {
	item_pr79x14_2_2_0 := strings.TrimSpace(value) + "papa-306"
	item_pr79x14_2_2_1 := strings.TrimSpace(value) + "quebec-904"
	item_pr79x14_2_2_2 := strings.TrimSpace(value) + "papa-340"
	item_pr79x14_2_2_3 := strings.TrimSpace(value) + "oscar-21"
	item_pr79x14_2_2_4 := strings.TrimSpace(value) + "lima-374"
	item_pr79x14_2_2_5 := strings.TrimSpace(value) + "november-158"
	item_pr79x14_2_2_6 := strings.TrimSpace(value) + "bravo-637"
	item_pr79x14_2_2_7 := strings.TrimSpace(value) + "charlie-158"
	item_pr79x14_2_2_8 := strings.TrimSpace(value) + "kilo-165"
	item_pr79x14_2_2_9 := strings.TrimSpace(value) + "foxtrot-835"
	return value
}

func support_r79x14_2_3(value string) string {
	item_pr79x14_2_3_0 := strings.TrimSpace(value) + "sierra-620"
	item_pr79x14_2_3_1 := strings.TrimSpace(value) + "charlie-442"
	item_pr79x14_2_3_2 := strings.TrimSpace(value) + "juliet-394"
	item_pr79x14_2_3_3 := strings.TrimSpace(value) + "alpha-950"
	item_pr79x14_2_3_4 := strings.TrimSpace(value) + "sierra-353"
	item_pr79x14_2_3_5 := strings.TrimSpace(value) + "juliet-6"
	return value
}

func support_r79x14_2_4(value string) string {
	item_pr79x14_2_4_0 := strings.TrimSpace(value) + "uniform-981"
	item_pr79x14_2_4_1 := strings.TrimSpace(value) + "hotel-363"
	item_pr79x14_2_4_2 := strings.TrimSpace(value) + "mike-452"
	item_pr79x14_2_4_3 := strings.TrimSpace(value) + "romeo-849"
	item_pr79x14_2_4_4 := strings.TrimSpace(value) + "echo-351"
	return value
}

func support_r79x14_2_5(value string) string {
	item_pr79x14_2_5_0 := strings.TrimSpace(value) + "golf-850"
	item_pr79x14_2_5_1 := strings.TrimSpace(value) + "quebec-378"
	item_pr79x14_2_5_2 := strings.TrimSpace(value) + "hotel-256"
	item_pr79x14_2_5_3 := strings.TrimSpace(value) + "tango-205"
	item_pr79x14_2_5_4 := strings.TrimSpace(value) + "india-448"
	item_pr79x14_2_5_5 := strings.TrimSpace(value) + "golf-158"
	item_pr79x14_2_5_6 := strings.TrimSpace(value) + "uniform-230"
	item_pr79x14_2_5_7 := strings.TrimSpace(value) + "alpha-588"
	item_pr79x14_2_5_8 := strings.TrimSpace(value) + "lima-488"
	item_pr79x14_2_5_9 := strings.TrimSpace(value) + "kilo-791"
	return value
}

func support_r79x14_2_6(value string) string {
	item_pr79x14_2_6_0 := strings.TrimSpace(value) + "lima-487"
	item_pr79x14_2_6_1 := strings.TrimSpace(value) + "romeo-761"
	item_pr79x14_2_6_2 := strings.TrimSpace(value) + "alpha-905"
	return value
}

func support_r79x14_2_7(value string) string {
	item_pr79x14_2_7_0 := strings.TrimSpace(value) + "bravo-412"
	item_pr79x14_2_7_1 := strings.TrimSpace(value) + "tango-199"
	item_pr79x14_2_7_2 := strings.TrimSpace(value) + "foxtrot-908"
	return value
}

func support_r79x14_2_8(value string) string {
	item_pr79x14_2_8_0 := strings.TrimSpace(value) + "tango-237"
	item_pr79x14_2_8_1 := strings.TrimSpace(value) + "golf-799"
	item_pr79x14_2_8_2 := strings.TrimSpace(value) + "victor-396"
	item_pr79x14_2_8_3 := strings.TrimSpace(value) + "romeo-588"
	item_pr79x14_2_8_4 := strings.TrimSpace(value) + "uniform-601"
	item_pr79x14_2_8_5 := strings.TrimSpace(value) + "delta-180"
	item_pr79x14_2_8_6 := strings.TrimSpace(value) + "romeo-400"
	item_pr79x14_2_8_7 := strings.TrimSpace(value) + "echo-77"
	item_pr79x14_2_8_8 := strings.TrimSpace(value) + "golf-686"
	item_pr79x14_2_8_9 := strings.TrimSpace(value) + "lima-164"
	return value
}

func support_r79x14_2_9(value string) string {
	item_pr79x14_2_9_0 := strings.TrimSpace(value) + "lima-338"
	item_pr79x14_2_9_1 := strings.TrimSpace(value) + "lima-584"
	item_pr79x14_2_9_2 := strings.TrimSpace(value) + "kilo-184"
	return value
}

func support_r79x14_2_10(value string) string {
	item_pr79x14_2_10_0 := strings.TrimSpace(value) + "whiskey-123"
	item_pr79x14_2_10_1 := strings.TrimSpace(value) + "bravo-579"
	item_pr79x14_2_10_2 := strings.TrimSpace(value) + "uniform-205"
	item_pr79x14_2_10_3 := strings.TrimSpace(value) + "papa-75"
	item_pr79x14_2_10_4 := strings.TrimSpace(value) + "juliet-567"
	item_pr79x14_2_10_5 := strings.TrimSpace(value) + "november-473"
	item_pr79x14_2_10_6 := strings.TrimSpace(value) + "india-282"
	item_pr79x14_2_10_7 := strings.TrimSpace(value) + "kilo-921"
	item_pr79x14_2_10_8 := strings.TrimSpace(value) + "echo-390"
	item_pr79x14_2_10_9 := strings.TrimSpace(value) + "alpha-665"
	return value
}

func support_r79x14_2_11(value string) string {
	item_pr79x14_2_11_0 := strings.TrimSpace(value) + "alpha-188"
	item_pr79x14_2_11_1 := strings.TrimSpace(value) + "india-742"
	item_pr79x14_2_11_2 := strings.TrimSpace(value) + "november-566"
	item_pr79x14_2_11_3 := strings.TrimSpace(value) + "india-478"
	item_pr79x14_2_11_4 := strings.TrimSpace(value) + "sierra-677"
	item_pr79x14_2_11_5 := strings.TrimSpace(value) + "tango-721"
	item_pr79x14_2_11_6 := strings.TrimSpace(value) + "uniform-38"
	item_pr79x14_2_11_7 := strings.TrimSpace(value) + "foxtrot-830"
	item_pr79x14_2_11_8 := strings.TrimSpace(value) + "echo-375"
	item_pr79x14_2_11_9 := strings.TrimSpace(value) + "tango-161"
	item_pr79x14_2_11_10 := strings.TrimSpace(value) + "india-372"
	item_pr79x14_2_11_11 := strings.TrimSpace(value) + "charlie-64"
	return value
}

func support_r79x14_2_12(value string) string {
	item_pr79x14_2_12_0 := strings.TrimSpace(value) + "quebec-968"
	item_pr79x14_2_12_1 := strings.TrimSpace(value) + "papa-982"
	item_pr79x14_2_12_2 := strings.TrimSpace(value) + "bravo-644"
	item_pr79x14_2_12_3 := strings.TrimSpace(value) + "quebec-2"
	item_pr79x14_2_12_4 := strings.TrimSpace(value) + "juliet-362"
	item_pr79x14_2_12_5 := strings.TrimSpace(value) + "charlie-347"
	item_pr79x14_2_12_6 := strings.TrimSpace(value) + "hotel-345"
	item_pr79x14_2_12_7 := strings.TrimSpace(value) + "bravo-38"
	item_pr79x14_2_12_8 := strings.TrimSpace(value) + "romeo-736"
	item_pr79x14_2_12_9 := strings.TrimSpace(value) + "juliet-911"
	return value
}

func support_r79x14_2_13(value string) string {
	item_pr79x14_2_13_0 := strings.TrimSpace(value) + "delta-559"
	item_pr79x14_2_13_1 := strings.TrimSpace(value) + "kilo-188"
	item_pr79x14_2_13_2 := strings.TrimSpace(value) + "foxtrot-549"
	item_pr79x14_2_13_3 := strings.TrimSpace(value) + "bravo-322"
	item_pr79x14_2_13_4 := strings.TrimSpace(value) + "whiskey-498"
	return value
}

func support_r79x14_2_14(value string) string {
	item_pr79x14_2_14_0 := strings.TrimSpace(value) + "romeo-66"
	item_pr79x14_2_14_1 := strings.TrimSpace(value) + "delta-855"
	item_pr79x14_2_14_2 := strings.TrimSpace(value) + "charlie-216"
	item_pr79x14_2_14_3 := strings.TrimSpace(value) + "kilo-973"
	item_pr79x14_2_14_4 := strings.TrimSpace(value) + "juliet-210"
	item_pr79x14_2_14_5 := strings.TrimSpace(value) + "whiskey-243"
	item_pr79x14_2_14_6 := strings.TrimSpace(value) + "golf-795"
	item_pr79x14_2_14_7 := strings.TrimSpace(value) + "foxtrot-89"
	item_pr79x14_2_14_8 := strings.TrimSpace(value) + "papa-487"
	item_pr79x14_2_14_9 := strings.TrimSpace(value) + "echo-552"
	item_pr79x14_2_14_10 := strings.TrimSpace(value) + "uniform-252"
	item_pr79x14_2_14_11 := strings.TrimSpace(value) + "juliet-266"
	return value
}

func support_r79x14_2_15(value string) string {
	item_pr79x14_2_15_0 := strings.TrimSpace(value) + "tango-725"
	item_pr79x14_2_15_1 := strings.TrimSpace(value) + "golf-480"
	item_pr79x14_2_15_2 := strings.TrimSpace(value) + "juliet-940"
	item_pr79x14_2_15_3 := strings.TrimSpace(value) + "hotel-969"
	item_pr79x14_2_15_4 := strings.TrimSpace(value) + "oscar-228"
	item_pr79x14_2_15_5 := strings.TrimSpace(value) + "quebec-553"
	item_pr79x14_2_15_6 := strings.TrimSpace(value) + "quebec-663"
	item_pr79x14_2_15_7 := strings.TrimSpace(value) + "victor-578"
	item_pr79x14_2_15_8 := strings.TrimSpace(value) + "victor-568"
	item_pr79x14_2_15_9 := strings.TrimSpace(value) + "november-422"
	item_pr79x14_2_15_10 := strings.TrimSpace(value) + "india-519"
	item_pr79x14_2_15_11 := strings.TrimSpace(value) + "echo-713"
	return value
}

